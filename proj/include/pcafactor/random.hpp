#pragma once

#include <cstdint>
#include <random>

namespace pcafactor {

// Deterministic standard-normal stream: MT19937-64 (bit-stable by the C++
// standard) uniforms shaped by the Marsaglia polar transform. A given seed
// always yields the same sequence.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : rng_(seed) {}

  double next();

 private:
  double unit();  // uniform in [0, 1)

  std::mt19937_64 rng_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace pcafactor
