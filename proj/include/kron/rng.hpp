#pragma once

#include <cstdint>
#include <random>

namespace kron {

// Deterministic uniform source: mt19937_64 with the top 53 bits mapped to
// [0,1). The mapping is spelled out (rather than using a distribution
// object) so streams are reproducible across standard libraries.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : gen_(seed) {}

  double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next(); }

  // Uniform integer in [0, n).
  std::uint64_t next_index(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace kron
