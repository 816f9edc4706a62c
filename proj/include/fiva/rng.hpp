// Counter-based random number generation. Every random value in the toolkit
// derives from a 64-bit seed plus a stream id, so runs replay bit-identically
// regardless of call interleaving or worker count.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace fiva {

namespace detail {
// SplitMix64 output function; bijective mixer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(detail::mix64(detail::mix64(seed) ^
                           (0xD2B74407B1CE6E93ull * (stream + 1)))) {}

  std::uint64_t next_u64() { return detail::mix64(key_ + counter_++); }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; second deviate cached.
  double next_normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = next_double();
    double u2 = next_double();
    // Map u1 to (0, 1] so the log stays finite.
    double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
    double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    have_cached_ = true;
    return radius * std::cos(angle);
  }

  // Zero-mean Laplacian with scale b = 1 (variance 2).
  double next_laplace() {
    double u = next_double() - 0.5;
    double mag = -std::log(1.0 - 2.0 * std::abs(u));
    return u < 0.0 ? -mag : mag;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace fiva
