#pragma once

// Reproducible randomness for simulated worlds. The bit source is
// std::mt19937_64, whose output sequence the standard fixes; the derived
// draws below are defined here rather than by <random> distributions,
// whose algorithms are implementation-defined.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace mproc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// (x >> 11) + 1 scaled by 2^-53: uniform on (0, 1].
  double uniform01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  /// Uniform on [0, n): rejects draws below 2^64 mod n, then reduces mod n.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  /// Standard normal by Box-Muller, cosine branch only:
  /// sqrt(-2 ln u1) * cos(2 pi u2) with u1 drawn before u2.
  double gaussian() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mproc
