#pragma once

#include <cstddef>
#include <vector>

namespace pcafactor {

// Observations of a single random variable: at least two values, all finite.
class Sample {
 public:
  explicit Sample(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

// Variance divisor. The loaded (1/n) estimator is the default throughout the
// pipeline; the unloaded (1/(n-1)) one is exposed for comparison.
enum class Divisor { loaded_n, unloaded_n_minus_1 };

struct SummaryStats {
  double mean;
  double variance;
  double std_dev;
  Divisor divisor;
};

double mean(const Sample& sample);

// Subtracts the mean; the result has zero mean to within rounding noise.
Sample center(const Sample& sample);

double variance(const Sample& sample, Divisor divisor = Divisor::loaded_n);
double std_dev(const Sample& sample, Divisor divisor = Divisor::loaded_n);
SummaryStats summarize(const Sample& sample,
                       Divisor divisor = Divisor::loaded_n);

// Rescales to zero mean and unit loaded variance. Constant samples are a
// hard error. Applied regardless of the underlying distribution.
Sample standardize(const Sample& sample);

// result_i = a + b * x_i
Sample linear_transform(const Sample& sample, double a, double b);

namespace detail {
// True when the sample's spread is at rounding-noise level relative to its
// magnitude, i.e. the column is constant for all statistical purposes.
bool effectively_constant(const Sample& sample);
}  // namespace detail

}  // namespace pcafactor
