#pragma once

#include <cstddef>
#include <vector>

#include "pcafactor/correlation.hpp"
#include "pcafactor/eigen.hpp"
#include "pcafactor/matrix.hpp"

namespace pcafactor {

// P = X U: zero-mean, pairwise orthogonal columns. component_variances
// holds the loaded variance of each column (the retained eigenvalues).
struct PrincipalComponents {
  Matrix p;
  std::vector<double> component_variances;
};

// Correlations between the primary variables (rows) and the components or
// factors (columns). For a full decomposition this is u * s, and each row
// has unit norm. Entries are correlation coefficients; per component the
// overall sign follows the eigenvector orientation convention.
class LoadingsMatrix {
 public:
  explicit LoadingsMatrix(Matrix l);

  const Matrix& matrix() const { return l_; }
  std::size_t variable_count() const { return l_.rows(); }
  std::size_t component_count() const { return l_.cols(); }

 private:
  Matrix l_;
};

// Projects standardized data onto the (orthonormal) columns of u. For the
// full eigenbasis, x = p u' reconstructs the input.
PrincipalComponents principal_components(const DataMatrix& x, const Matrix& u);

// Reduction way 1: project onto the first k eigenvectors.
PrincipalComponents reduce_via_u(const DataMatrix& x,
                                 const EigenDecomposition& decomp,
                                 std::size_t k);

// Reduction way 2: keep the first k columns of an existing projection.
// Produces bit-identical results to reduce_via_u on the same decomposition.
PrincipalComponents reduce_via_p(const PrincipalComponents& p, std::size_t k);

// L = u * s. Entry (i, j) is the correlation between variable i and
// component j, with no correlation formula evaluated.
LoadingsMatrix component_loadings(const EigenDecomposition& decomp);

// The same correlations computed from the data: entry (i, j) is
// (1/n) x_i' p_j / sqrt(var(p_j)). Kept in the shipped library so the
// closed form above can be cross-checked on real data.
Matrix direct_component_correlations(const DataMatrix& x,
                                     const PrincipalComponents& p);

// Hadamard square of the loadings: entry (i, j) is the fraction of variable
// i's variance carried by component j.
DeterminationMatrix component_common_variance(const LoadingsMatrix& l);

// Smallest k such that the first k components cover at least `threshold` of
// every variable's variance; m when no smaller k qualifies. d must be the
// full square common-variance matrix with columns in non-increasing
// eigenvalue order.
std::size_t select_k(const DeterminationMatrix& d, double threshold);

}  // namespace pcafactor
