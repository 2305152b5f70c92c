#pragma once

#include <cstdint>

namespace modelcomb {

/// xorshift64* generator (Marsaglia shift-register xorshift, final
/// multiplier 0x2545F4914F6CDD1D). 64-bit state; a zero seed is remapped
/// to a fixed nonzero constant. Uniform doubles use the top 53 bits, so
/// streams are bit-identical across platforms.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed)
      : state_(seed != 0 ? seed : 0x9E3779B97F4A7C15ull) {}

  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1Dull;
  }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace modelcomb
