#include "pcafactor/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pcafactor/errors.hpp"

namespace pcafactor {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeOffTolerance = 1e-12;

double off_diagonal_norm(const std::vector<double>& a, std::size_t m) {
  double s = 0.0;
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = p + 1; q < m; ++q) {
      s += 2.0 * a[p * m + q] * a[p * m + q];
    }
  }
  return std::sqrt(s);
}

// One cyclic sweep of Jacobi rotations over the upper triangle. a is the
// symmetric working matrix, v accumulates the rotations (columns become
// eigenvectors).
void jacobi_sweep(std::vector<double>& a, std::vector<double>& v,
                  std::size_t m) {
  for (std::size_t p = 0; p + 1 < m; ++p) {
    for (std::size_t q = p + 1; q < m; ++q) {
      const double apq = a[p * m + q];
      if (apq == 0.0) continue;
      const double app = a[p * m + p];
      const double aqq = a[q * m + q];
      const double tau = (aqq - app) / (2.0 * apq);
      double t;
      if (std::fabs(tau) > 1e150) {
        t = 1.0 / (2.0 * tau);  // avoid overflow in tau * tau
      } else {
        t = (tau >= 0.0 ? 1.0 : -1.0) /
            (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
      }
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      for (std::size_t k = 0; k < m; ++k) {
        if (k == p || k == q) continue;
        const double akp = a[k * m + p];
        const double akq = a[k * m + q];
        a[k * m + p] = a[p * m + k] = c * akp - s * akq;
        a[k * m + q] = a[q * m + k] = s * akp + c * akq;
      }
      a[p * m + p] = app - t * apq;
      a[q * m + q] = aqq + t * apq;
      a[p * m + q] = a[q * m + p] = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double vkp = v[k * m + p];
        const double vkq = v[k * m + q];
        v[k * m + p] = c * vkp - s * vkq;
        v[k * m + q] = s * vkp + c * vkq;
      }
    }
  }
}

// Orient a column so its entry of largest magnitude is positive; ties are
// broken by the lowest row index.
void fix_column_sign(std::vector<double>& u, std::size_t m, std::size_t j) {
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double mag = std::fabs(u[i * m + j]);
    if (mag > best) {
      best = mag;
      arg = i;
    }
  }
  if (u[arg * m + j] < 0.0) {
    for (std::size_t i = 0; i < m; ++i) u[i * m + j] = -u[i * m + j];
  }
}

}  // namespace

EigenDecomposition eigen_decompose(const CorrelationMatrix& r) {
  const std::size_t m = r.size();
  std::vector<double> a(r.matrix().data());
  std::vector<double> v(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) v[i * m + i] = 1.0;

  double fro = 0.0;
  for (const double e : a) fro += e * e;
  const double threshold = kRelativeOffTolerance * std::sqrt(fro);

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, m) <= threshold) {
      converged = true;
      break;
    }
    jacobi_sweep(a, v, m);
  }
  if (!converged) converged = off_diagonal_norm(a, m) <= threshold;
  if (!converged) {
    throw NumericalError("Jacobi eigensolver did not converge within " +
                         std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<double> values(m);
  for (std::size_t i = 0; i < m; ++i) values[i] = a[i * m + i];
  for (std::size_t i = 0; i < m; ++i) {
    if (values[i] < -1e-10) {
      throw NumericalError("correlation matrix is not positive semidefinite: "
                           "eigenvalue " +
                           std::to_string(values[i]));
    }
    if (values[i] < 0.0) values[i] = 0.0;
  }

  // sort non-increasingly; stable so degenerate eigenvalues keep the order
  // the sweep produced
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return values[x] > values[y];
                   });

  std::vector<double> sorted_values(m);
  std::vector<double> u(m * m);
  for (std::size_t j = 0; j < m; ++j) {
    sorted_values[j] = values[order[j]];
    for (std::size_t i = 0; i < m; ++i) u[i * m + j] = v[i * m + order[j]];
  }
  for (std::size_t j = 0; j < m; ++j) fix_column_sign(u, m, j);

  std::vector<double> roots(m);
  for (std::size_t j = 0; j < m; ++j) roots[j] = std::sqrt(sorted_values[j]);

  return EigenDecomposition{std::move(sorted_values),
                            Matrix(m, m, std::move(u)),
                            DiagonalMatrix(std::move(roots))};
}

DiagonalMatrix sqrt_eigenvalues(const EigenDecomposition& decomp) {
  return decomp.s;
}

}  // namespace pcafactor
