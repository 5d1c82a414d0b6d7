#include "pcafactor/pca.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "pcafactor/errors.hpp"

namespace pcafactor {

namespace {

Matrix first_columns(const Matrix& m, std::size_t k) {
  std::vector<double> out(m.rows() * k);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < k; ++j) out[i * k + j] = m(i, j);
  }
  return Matrix(m.rows(), k, std::move(out));
}

PrincipalComponents project(const DataMatrix& x, const Matrix& u) {
  Matrix p = matmul(x.observations(), u);
  std::vector<double> variances(p.cols());
  for (std::size_t j = 0; j < p.cols(); ++j) {
    std::vector<double> col(p.rows());
    for (std::size_t i = 0; i < p.rows(); ++i) col[i] = p(i, j);
    variances[j] = variance(Sample(std::move(col)));
  }
  return PrincipalComponents{std::move(p), std::move(variances)};
}

}  // namespace

LoadingsMatrix::LoadingsMatrix(Matrix l) : l_(std::move(l)) {
  std::vector<double> data(l_.data());
  for (double& v : data) {
    if (std::fabs(v) > 1.0 + 1e-10) {
      throw DataError("loadings entry " + std::to_string(v) +
                      " lies outside [-1, 1]");
    }
    v = std::clamp(v, -1.0, 1.0);
  }
  if (l_.rows() == l_.cols()) {
    // a full (square) loadings matrix carries all of each variable's
    // variance, so its rows must be unit vectors
    for (std::size_t i = 0; i < l_.rows(); ++i) {
      double norm_sq = 0.0;
      for (std::size_t j = 0; j < l_.cols(); ++j) {
        norm_sq += data[i * l_.cols() + j] * data[i * l_.cols() + j];
      }
      if (std::fabs(std::sqrt(norm_sq) - 1.0) > 1e-8) {
        throw DataError("full loadings row " + std::to_string(i + 1) +
                        " does not have unit norm");
      }
    }
  }
  l_ = Matrix(l_.rows(), l_.cols(), std::move(data));
}

PrincipalComponents principal_components(const DataMatrix& x,
                                         const Matrix& u) {
  if (!x.standardized()) {
    throw ShapeError("principal components require column-standardized data");
  }
  if (u.rows() != x.variable_count()) {
    throw ShapeError("projection matrix has " + std::to_string(u.rows()) +
                     " rows, expected " + std::to_string(x.variable_count()));
  }
  if (u.cols() > u.rows()) {
    throw ShapeError("projection matrix has more columns than rows");
  }
  return project(x, u);
}

PrincipalComponents reduce_via_u(const DataMatrix& x,
                                 const EigenDecomposition& decomp,
                                 std::size_t k) {
  const std::size_t m = decomp.u.cols();
  if (k < 1 || k > m) {
    throw ShapeError("k = " + std::to_string(k) + " out of range [1, " +
                     std::to_string(m) + "]");
  }
  if (!x.standardized()) {
    throw ShapeError("principal components require column-standardized data");
  }
  if (x.variable_count() != m) {
    throw ShapeError("data has " + std::to_string(x.variable_count()) +
                     " variables, decomposition has " + std::to_string(m));
  }
  return project(x, first_columns(decomp.u, k));
}

PrincipalComponents reduce_via_p(const PrincipalComponents& p, std::size_t k) {
  if (k < 1 || k > p.p.cols()) {
    throw ShapeError("k = " + std::to_string(k) + " out of range [1, " +
                     std::to_string(p.p.cols()) + "]");
  }
  std::vector<double> variances(p.component_variances.begin(),
                                p.component_variances.begin() +
                                    static_cast<std::ptrdiff_t>(k));
  return PrincipalComponents{first_columns(p.p, k), std::move(variances)};
}

LoadingsMatrix component_loadings(const EigenDecomposition& decomp) {
  return LoadingsMatrix(matmul(decomp.u, decomp.s));
}

Matrix direct_component_correlations(const DataMatrix& x,
                                     const PrincipalComponents& p) {
  const std::size_t n = x.observation_count();
  if (p.p.rows() != n) {
    throw ShapeError("data and components disagree on observation count: " +
                     std::to_string(n) + " vs " + std::to_string(p.p.rows()));
  }
  const std::size_t m = x.variable_count();
  const std::size_t k = p.p.cols();
  for (std::size_t j = 0; j < k; ++j) {
    if (p.component_variances[j] <= 0.0) {
      throw DataError("component " + std::to_string(j + 1) +
                      " has zero variance; correlation undefined");
    }
  }
  const Matrix& xs = x.observations();
  std::vector<double> out(m * k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double dot = 0.0;
      for (std::size_t l = 0; l < n; ++l) dot += xs(l, i) * p.p(l, j);
      out[i * k + j] = (dot / static_cast<double>(n)) /
                       std::sqrt(p.component_variances[j]);
    }
  }
  return Matrix(m, k, std::move(out));
}

DeterminationMatrix component_common_variance(const LoadingsMatrix& l) {
  return determination_matrix(l.matrix());
}

std::size_t select_k(const DeterminationMatrix& d, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ShapeError("threshold must lie in (0, 1], got " +
                     std::to_string(threshold));
  }
  const Matrix& dm = d.matrix();
  if (dm.rows() != dm.cols()) {
    throw ShapeError("select_k needs the full square common-variance matrix");
  }
  const std::size_t m = dm.rows();
  std::vector<double> cumulative(m, 0.0);
  for (std::size_t k = 1; k <= m; ++k) {
    bool all_covered = true;
    for (std::size_t i = 0; i < m; ++i) {
      cumulative[i] += dm(i, k - 1);
      if (cumulative[i] < threshold) all_covered = false;
    }
    if (all_covered) return k;
  }
  return m;
}

}  // namespace pcafactor
