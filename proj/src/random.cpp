#include "pcafactor/random.hpp"

#include <cmath>

namespace pcafactor {

double NormalStream::unit() {
  // top 53 bits of the engine output, mapped to [0, 1)
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double NormalStream::next() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  while (true) {
    const double u = 2.0 * unit() - 1.0;
    const double v = 2.0 * unit() - 1.0;
    const double s = u * u + v * v;
    if (s >= 1.0 || s == 0.0) continue;
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * f;
    has_cached_ = true;
    return u * f;
  }
}

}  // namespace pcafactor
