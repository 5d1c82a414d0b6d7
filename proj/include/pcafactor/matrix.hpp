#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pcafactor {

// Dense real matrix, row-major storage. Construction rejects NaN/Inf;
// instances are immutable afterwards and safe to share between threads.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

class DiagonalMatrix {
 public:
  explicit DiagonalMatrix(std::vector<double> diagonal);

  std::size_t order() const { return diagonal_.size(); }
  const std::vector<double>& diagonal() const { return diagonal_; }
  Matrix dense() const;

 private:
  std::vector<double> diagonal_;
};

// Elementwise (Schur) product of two same-shaped matrices.
Matrix hadamard(const Matrix& a, const Matrix& b);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matmul(const Matrix& a, const DiagonalMatrix& d);  // scales columns
Matrix matmul(const DiagonalMatrix& d, const Matrix& a);  // scales rows

Matrix transpose(const Matrix& a);

// Raises each diagonal entry to `exponent`. Entries must be strictly
// positive when the exponent is negative or fractional.
DiagonalMatrix diag_power(const DiagonalMatrix& d, double exponent);

}  // namespace pcafactor
