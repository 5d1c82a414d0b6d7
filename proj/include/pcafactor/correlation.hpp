#pragma once

#include <cstddef>

#include "pcafactor/matrix.hpp"
#include "pcafactor/vector_stats.hpp"

namespace pcafactor {

// n observations of m random variables, one variable per column. When the
// standardized flag is set the constructor checks that every column has mean
// 0 (within 1e-10) and unit loaded variance (within 1e-8).
class DataMatrix {
 public:
  explicit DataMatrix(Matrix observations, bool standardized = false);

  const Matrix& observations() const { return observations_; }
  bool standardized() const { return standardized_; }
  std::size_t observation_count() const { return observations_.rows(); }
  std::size_t variable_count() const { return observations_.cols(); }
  Sample column(std::size_t j) const;

 private:
  Matrix observations_;
  bool standardized_;
};

// Symmetric matrix of pairwise correlation coefficients: unit diagonal,
// entries clamped to [-1, 1] (overshoot beyond 1e-12 is rejected).
class CorrelationMatrix {
 public:
  explicit CorrelationMatrix(Matrix r);

  const Matrix& matrix() const { return r_; }
  std::size_t size() const { return r_.rows(); }

 private:
  Matrix r_;
};

// Hadamard square of a correlation or loadings matrix; entries are
// shared-variance fractions in [0, 1].
class DeterminationMatrix {
 public:
  explicit DeterminationMatrix(Matrix d);

  const Matrix& matrix() const { return d_; }

 private:
  Matrix d_;
};

// C = (1/n) Xc' Xc over internally centered columns; the diagonal holds the
// loaded column variances.
Matrix covariance_matrix(const DataMatrix& x);

// Centers every column and divides it by its loaded standard deviation.
// Constant columns are an error naming the offending column (1-based).
DataMatrix standardize_columns(const DataMatrix& x);

// Cosine of the angle between the two centered samples.
double pearson(const Sample& x, const Sample& y);

// R = (1/n) Xs' Xs over internally standardized columns.
CorrelationMatrix correlation_matrix(const DataMatrix& x);

// Elementwise square of a matrix of correlation coefficients; entries of r
// may overshoot [-1, 1] by at most 1e-9.
DeterminationMatrix determination_matrix(const Matrix& r);

}  // namespace pcafactor
