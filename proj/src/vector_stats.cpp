#include "pcafactor/vector_stats.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "compensated.hpp"
#include "pcafactor/errors.hpp"

namespace pcafactor {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw DataError("sample needs at least 2 observations, got " +
                    std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DataError("sample value " + std::to_string(i) + " is not finite");
    }
  }
}

double mean(const Sample& sample) {
  return detail::compensated_sum(sample.values().data(), sample.size()) /
         static_cast<double>(sample.size());
}

Sample center(const Sample& sample) {
  const double mu = mean(sample);
  std::vector<double> out(sample.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sample[i] - mu;
  // remove the residual mean left by rounding in the first subtraction
  const double residual =
      detail::compensated_sum(out.data(), out.size()) /
      static_cast<double>(out.size());
  for (double& v : out) v -= residual;
  return Sample(std::move(out));
}

namespace {

double sum_of_squares(const std::vector<double>& xs) {
  double sum = 0.0;
  double comp = 0.0;
  for (const double x : xs) {
    const double sq = x * x;
    const double t = sum + sq;
    if (sum >= sq) {
      comp += (sum - t) + sq;
    } else {
      comp += (sq - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace

double variance(const Sample& sample, Divisor divisor) {
  const Sample centered = center(sample);
  const double ss = sum_of_squares(centered.values());
  const double d = divisor == Divisor::loaded_n
                       ? static_cast<double>(sample.size())
                       : static_cast<double>(sample.size() - 1);
  return ss / d;
}

double std_dev(const Sample& sample, Divisor divisor) {
  return std::sqrt(variance(sample, divisor));
}

SummaryStats summarize(const Sample& sample, Divisor divisor) {
  const double v = variance(sample, divisor);
  return SummaryStats{mean(sample), v, std::sqrt(v), divisor};
}

bool detail::effectively_constant(const Sample& sample) {
  double scale = 0.0;
  for (const double v : sample.values()) scale = std::max(scale, std::fabs(v));
  const double floor = 1e-12 * scale;
  return variance(sample, Divisor::loaded_n) <= floor * floor;
}

Sample standardize(const Sample& sample) {
  if (detail::effectively_constant(sample)) {
    throw DataError("sample is constant (zero variance); cannot standardize");
  }
  const Sample centered = center(sample);
  const double s = std::sqrt(sum_of_squares(centered.values()) /
                             static_cast<double>(sample.size()));
  std::vector<double> out(centered.values());
  for (double& v : out) v /= s;
  return Sample(std::move(out));
}

Sample linear_transform(const Sample& sample, double a, double b) {
  std::vector<double> out(sample.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a + b * sample[i];
  return Sample(std::move(out));
}

}  // namespace pcafactor
