#pragma once

#include <cmath>
#include <cstdint>

namespace rhig {

/// Counter-based pseudo-random stream (splitmix64 core).
///
/// Every draw is a pure function of (seed, counter), so a stream can be
/// reproduced bit-exactly on any platform and streams for different seeds
/// never interact. One stream per run seed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() { return mix(seed_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

  /// Uniform in the open interval (0, 1).
  double next_uniform() {
    // 53-bit mantissa; offset by half an ulp to avoid exact 0.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi].
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }

  /// Standard normal via Box-Muller (one value per call, spare cached).
  double next_gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rhig
