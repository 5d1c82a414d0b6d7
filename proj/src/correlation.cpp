#include "pcafactor/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "pcafactor/errors.hpp"

namespace pcafactor {

namespace {

std::vector<double> extract_column(const Matrix& m, std::size_t j) {
  std::vector<double> col(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m(i, j);
  return col;
}

Matrix scaled(const Matrix& m, double factor) {
  std::vector<double> out(m.data());
  for (double& v : out) v *= factor;
  return Matrix(m.rows(), m.cols(), std::move(out));
}

}  // namespace

DataMatrix::DataMatrix(Matrix observations, bool standardized)
    : observations_(std::move(observations)), standardized_(standardized) {
  if (observations_.rows() < 2) {
    throw DataError("data matrix needs at least 2 observations, got " +
                    std::to_string(observations_.rows()));
  }
  if (standardized_) {
    for (std::size_t j = 0; j < observations_.cols(); ++j) {
      const Sample col = column(j);
      if (std::fabs(mean(col)) > 1e-10) {
        throw DataError("column " + std::to_string(j + 1) +
                        " is not centered; cannot be flagged standardized");
      }
      if (std::fabs(variance(col) - 1.0) > 1e-8) {
        throw DataError("column " + std::to_string(j + 1) +
                        " lacks unit variance; cannot be flagged standardized");
      }
    }
  }
}

Sample DataMatrix::column(std::size_t j) const {
  return Sample(extract_column(observations_, j));
}

Matrix covariance_matrix(const DataMatrix& x) {
  const std::size_t n = x.observation_count();
  const std::size_t m = x.variable_count();
  std::vector<double> centered(n * m);
  for (std::size_t j = 0; j < m; ++j) {
    const Sample col = center(x.column(j));
    for (std::size_t i = 0; i < n; ++i) centered[i * m + j] = col[i];
  }
  const Matrix xc(n, m, std::move(centered));
  return scaled(matmul(transpose(xc), xc), 1.0 / static_cast<double>(n));
}

DataMatrix standardize_columns(const DataMatrix& x) {
  const std::size_t n = x.observation_count();
  const std::size_t m = x.variable_count();
  std::vector<double> out(n * m);
  for (std::size_t j = 0; j < m; ++j) {
    const Sample col = x.column(j);
    if (detail::effectively_constant(col)) {
      throw DataError("column " + std::to_string(j + 1) +
                      " has zero variance; cannot standardize");
    }
    const Sample std_col = standardize(col);
    for (std::size_t i = 0; i < n; ++i) out[i * m + j] = std_col[i];
  }
  return DataMatrix(Matrix(n, m, std::move(out)), true);
}

double pearson(const Sample& x, const Sample& y) {
  if (x.size() != y.size()) {
    throw ShapeError("pearson requires equal lengths: " +
                     std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()));
  }
  if (detail::effectively_constant(x) || detail::effectively_constant(y)) {
    throw DataError("pearson correlation is undefined for a constant sample");
  }
  const Sample cx = center(x);
  const Sample cy = center(y);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < cx.size(); ++i) {
    sxy += cx[i] * cy[i];
    sxx += cx[i] * cx[i];
    syy += cy[i] * cy[i];
  }
  const double r = sxy / (std::sqrt(sxx) * std::sqrt(syy));
  return std::clamp(r, -1.0, 1.0);
}

CorrelationMatrix::CorrelationMatrix(Matrix r) : r_(std::move(r)) {
  if (r_.rows() != r_.cols()) {
    throw ShapeError("correlation matrix must be square, got " +
                     std::to_string(r_.rows()) + "x" +
                     std::to_string(r_.cols()));
  }
  const std::size_t m = r_.rows();
  for (std::size_t i = 0; i < m; ++i) {
    if (std::fabs(r_(i, i) - 1.0) > 1e-10) {
      throw DataError("correlation matrix diagonal entry " +
                      std::to_string(i + 1) + " is " +
                      std::to_string(r_(i, i)) + ", expected 1");
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      if (std::fabs(r_(i, j) - r_(j, i)) > 1e-12) {
        throw DataError("correlation matrix is not symmetric at (" +
                        std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                        ")");
      }
    }
  }
  std::vector<double> data(r_.data());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double avg = 0.5 * (data[i * m + j] + data[j * m + i]);
      data[i * m + j] = data[j * m + i] = avg;
    }
  }
  for (double& v : data) {
    if (std::fabs(v) > 1.0 + 1e-12) {
      throw DataError("correlation entry " + std::to_string(v) +
                      " lies outside [-1, 1]");
    }
    v = std::clamp(v, -1.0, 1.0);
  }
  r_ = Matrix(m, m, std::move(data));
}

CorrelationMatrix correlation_matrix(const DataMatrix& x) {
  const DataMatrix std_x = x.standardized() ? x : standardize_columns(x);
  const Matrix& xs = std_x.observations();
  const double n = static_cast<double>(std_x.observation_count());
  return CorrelationMatrix(scaled(matmul(transpose(xs), xs), 1.0 / n));
}

DeterminationMatrix::DeterminationMatrix(Matrix d) : d_(std::move(d)) {
  std::vector<double> data(d_.data());
  for (double& v : data) {
    if (v < -1e-12 || v > 1.0 + 1e-12) {
      throw DataError("determination entry " + std::to_string(v) +
                      " lies outside [0, 1]");
    }
    v = std::clamp(v, 0.0, 1.0);
  }
  d_ = Matrix(d_.rows(), d_.cols(), std::move(data));
}

DeterminationMatrix determination_matrix(const Matrix& r) {
  for (const double v : r.data()) {
    if (std::fabs(v) > 1.0 + 1e-9) {
      throw DataError("correlation entry " + std::to_string(v) +
                      " lies outside [-1, 1]; cannot square");
    }
  }
  std::vector<double> out(r.data().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::min(r.data()[i] * r.data()[i], 1.0);
  }
  return DeterminationMatrix(Matrix(r.rows(), r.cols(), std::move(out)));
}

}  // namespace pcafactor
