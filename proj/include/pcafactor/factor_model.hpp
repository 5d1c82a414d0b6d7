#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "pcafactor/correlation.hpp"
#include "pcafactor/eigen.hpp"
#include "pcafactor/pca.hpp"

namespace pcafactor {

// Linear predictive model of m primary variables as combinations of k
// independent standardized factors. Observations sit in rows throughout, so
// simulated data is F L' with the factor draws F in rows.
struct FactorModel {
  LoadingsMatrix loadings;  // m x k
  std::size_t k;
  std::size_t source_dimension;
};

// L = u * s; identical to component_loadings, restated under the factor
// analysis name.
LoadingsMatrix factor_loadings(const EigenDecomposition& decomp);

// Wraps an already-reduced loadings matrix as a model, checking that each
// variable's modeled communality stays within [0, 1].
FactorModel make_factor_model(LoadingsMatrix loadings);

// Keeps the first k columns. Equals the product of the truncated u and s
// exactly, since the diagonal s scales columns independently.
FactorModel reduce_loadings(const LoadingsMatrix& l, std::size_t k);

// L L': the correlation structure the model reproduces. Equals the input
// correlation matrix when k = m.
Matrix implied_correlation(const FactorModel& model);

// Diagonal of L L': the fraction of each variable's variance the model
// carries. Below 1 for reduced models; the simulator reports rather than
// rescales this deficit.
std::vector<double> modeled_variances(const FactorModel& model);

// Hadamard square of the reduced loadings.
DeterminationMatrix factor_common_variance(const FactorModel& model);

// Draws `samples` rows of independent standard-normal factors from the
// seeded NormalStream and maps them through the loadings.
DataMatrix simulate(const FactorModel& model, std::size_t samples,
                    std::uint64_t seed);

// Same, with a caller-supplied zero-mean unit-variance sampler.
DataMatrix simulate(const FactorModel& model, std::size_t samples,
                    const std::function<double()>& draw_factor);

}  // namespace pcafactor
