#pragma once

#include <cstdint>
#include <random>

namespace proapt {

// Deterministic RNG. mt19937_64 has a standard-mandated sequence; the
// distribution mappings below are hand-rolled because std:: distributions
// are implementation-defined and would break run-to-run reproducibility
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound). Bitmask rejection, unbiased.
  std::uint64_t uniform_int(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      std::uint64_t v = eng_() & mask;
      if (v < bound) return v;
    }
  }

  // Uniform in [lo, hi).
  double uniform_range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace proapt
