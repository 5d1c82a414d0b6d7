#include "pcafactor/factor_model.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "pcafactor/errors.hpp"
#include "pcafactor/random.hpp"

namespace pcafactor {

LoadingsMatrix factor_loadings(const EigenDecomposition& decomp) {
  return component_loadings(decomp);
}

FactorModel make_factor_model(LoadingsMatrix loadings) {
  const std::size_t m = loadings.variable_count();
  const std::size_t k = loadings.component_count();
  if (k > m) {
    throw ShapeError("model has more factors (" + std::to_string(k) +
                     ") than variables (" + std::to_string(m) + ")");
  }
  for (std::size_t i = 0; i < m; ++i) {
    double communality = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      communality += loadings.matrix()(i, j) * loadings.matrix()(i, j);
    }
    if (communality < -1e-8 || communality > 1.0 + 1e-8) {
      throw DataError("modeled communality of variable " +
                      std::to_string(i + 1) + " is " +
                      std::to_string(communality) + ", outside [0, 1]");
    }
  }
  return FactorModel{std::move(loadings), k, m};
}

FactorModel reduce_loadings(const LoadingsMatrix& l, std::size_t k) {
  if (k < 1 || k > l.component_count()) {
    throw ShapeError("k = " + std::to_string(k) + " out of range [1, " +
                     std::to_string(l.component_count()) + "]");
  }
  const std::size_t m = l.variable_count();
  std::vector<double> out(m * k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) out[i * k + j] = l.matrix()(i, j);
  }
  return make_factor_model(LoadingsMatrix(Matrix(m, k, std::move(out))));
}

Matrix implied_correlation(const FactorModel& model) {
  const Matrix& l = model.loadings.matrix();
  return matmul(l, transpose(l));
}

std::vector<double> modeled_variances(const FactorModel& model) {
  const Matrix& l = model.loadings.matrix();
  std::vector<double> out(l.rows(), 0.0);
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) out[i] += l(i, j) * l(i, j);
  }
  return out;
}

DeterminationMatrix factor_common_variance(const FactorModel& model) {
  return determination_matrix(model.loadings.matrix());
}

DataMatrix simulate(const FactorModel& model, std::size_t samples,
                    const std::function<double()>& draw_factor) {
  if (samples < 2) {
    throw ShapeError("simulation needs at least 2 samples, got " +
                     std::to_string(samples));
  }
  const std::size_t k = model.k;
  std::vector<double> factors(samples * k);
  for (double& f : factors) f = draw_factor();
  const Matrix f(samples, k, std::move(factors));
  return DataMatrix(matmul(f, transpose(model.loadings.matrix())), false);
}

DataMatrix simulate(const FactorModel& model, std::size_t samples,
                    std::uint64_t seed) {
  NormalStream stream(seed);
  return simulate(model, samples, [&stream] { return stream.next(); });
}

}  // namespace pcafactor
