#pragma once

#include <cmath>
#include <cstddef>

namespace pcafactor::detail {

// Neumaier variant of Kahan summation: the error term also tracks the case
// where the incoming value dominates the running sum.
inline double compensated_sum(const double* xs, std::size_t n) {
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = xs[i];
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

}  // namespace pcafactor::detail
