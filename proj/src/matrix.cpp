#include "pcafactor/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pcafactor/errors.hpp"

namespace pcafactor {

namespace {

void check_finite(const std::vector<double>& data, std::size_t cols,
                  const char* what) {
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!std::isfinite(data[i])) {
      throw DataError(std::string(what) + " entry (" +
                      std::to_string(i / cols) + ", " +
                      std::to_string(i % cols) + ") is not finite");
    }
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows_ == 0 || cols_ == 0) {
    throw ShapeError("matrix dimensions must be positive");
  }
  if (data_.size() != rows_ * cols_) {
    throw ShapeError("matrix data has " + std::to_string(data_.size()) +
                     " entries, expected " + std::to_string(rows_ * cols_));
  }
  check_finite(data_, cols_, "matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(0) {
  if (rows_ == 0) throw ShapeError("matrix dimensions must be positive");
  cols_ = rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("rows have unequal lengths");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (cols_ == 0) throw ShapeError("matrix dimensions must be positive");
  check_finite(data_, cols_, "matrix");
}

Matrix Matrix::identity(std::size_t n) {
  std::vector<double> data(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) data[i * n + i] = 1.0;
  return Matrix(n, n, std::move(data));
}

DiagonalMatrix::DiagonalMatrix(std::vector<double> diagonal)
    : diagonal_(std::move(diagonal)) {
  if (diagonal_.empty()) throw ShapeError("diagonal must be non-empty");
  check_finite(diagonal_, diagonal_.size(), "diagonal");
}

Matrix DiagonalMatrix::dense() const {
  const std::size_t n = order();
  std::vector<double> data(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) data[i * n + i] = diagonal_[i];
  return Matrix(n, n, std::move(data));
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("hadamard product requires identical shapes: " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
  std::vector<double> out(a.data().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.data()[i] * b.data()[i];
  }
  return Matrix(a.rows(), a.cols(), std::move(out));
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul shape mismatch: " + std::to_string(a.rows()) +
                     "x" + std::to_string(a.cols()) + " * " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const std::size_t n = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t m = b.cols();
  const double* ad = a.data().data();
  const double* bd = b.data().data();
  std::vector<double> out(n * m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = out.data() + i * m;
    for (std::size_t l = 0; l < inner; ++l) {
      const double ail = ad[i * inner + l];
      const double* brow = bd + l * m;
      for (std::size_t j = 0; j < m; ++j) row[j] += ail * brow[j];
    }
  }
  return Matrix(n, m, std::move(out));
}

Matrix matmul(const Matrix& a, const DiagonalMatrix& d) {
  if (a.cols() != d.order()) {
    throw ShapeError("matmul shape mismatch: " + std::to_string(a.cols()) +
                     " columns vs diagonal of order " +
                     std::to_string(d.order()));
  }
  std::vector<double> out(a.data().size());
  const std::size_t m = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out[i * m + j] = a(i, j) * d.diagonal()[j];
    }
  }
  return Matrix(a.rows(), m, std::move(out));
}

Matrix matmul(const DiagonalMatrix& d, const Matrix& a) {
  if (d.order() != a.rows()) {
    throw ShapeError("matmul shape mismatch: diagonal of order " +
                     std::to_string(d.order()) + " vs " +
                     std::to_string(a.rows()) + " rows");
  }
  std::vector<double> out(a.data().size());
  const std::size_t m = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out[i * m + j] = d.diagonal()[i] * a(i, j);
    }
  }
  return Matrix(a.rows(), m, std::move(out));
}

Matrix transpose(const Matrix& a) {
  std::vector<double> out(a.data().size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out[j * a.rows() + i] = a(i, j);
    }
  }
  return Matrix(a.cols(), a.rows(), std::move(out));
}

DiagonalMatrix diag_power(const DiagonalMatrix& d, double exponent) {
  const bool needs_positive =
      exponent < 0.0 || std::floor(exponent) != exponent;
  std::vector<double> out(d.order());
  for (std::size_t i = 0; i < d.order(); ++i) {
    const double v = d.diagonal()[i];
    if (needs_positive && v <= 0.0) {
      throw DataError("diagonal entry " + std::to_string(i) +
                      " must be strictly positive for exponent " +
                      std::to_string(exponent));
    }
    out[i] = std::pow(v, exponent);
  }
  return DiagonalMatrix(std::move(out));
}

}  // namespace pcafactor
