#pragma once

#include <vector>

#include "pcafactor/correlation.hpp"
#include "pcafactor/matrix.hpp"

namespace pcafactor {

// Eigendecomposition of a correlation matrix. Eigenvalues are sorted
// non-increasingly with their eigenvectors kept paired; eigenvectors have
// unit length and a deterministic orientation (the entry of largest
// magnitude in each column is positive, ties broken by lowest row index).
// s holds the square roots of the eigenvalues.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix u;
  DiagonalMatrix s;
};

// Cyclic Jacobi rotations, swept until the off-diagonal Frobenius norm
// falls below 1e-12 times the Frobenius norm of the input, capped at 100
// sweeps. Eigenvalues in [-1e-10, 0) are clamped to zero; anything more
// negative is rejected as non-PSD input.
EigenDecomposition eigen_decompose(const CorrelationMatrix& r);

DiagonalMatrix sqrt_eigenvalues(const EigenDecomposition& decomp);

}  // namespace pcafactor
