#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace bincover {

/// Identifier recorded in reports for the sampling stream below.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64+splitmix64-seeding";

inline constexpr std::uint64_t kDefaultSeed = 20140101;

/// SplitMix64 finalizer. Used to derive independent per-trial seeds from a
/// master seed so results do not depend on how trials are spread over workers.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

/// Portable sampling on top of std::mt19937_64 (whose output sequence is
/// fixed by the standard). Distributions are implemented here rather than
/// with <random> distributions, which differ between standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on the open interval (0,1); zero is rejected and redrawn.
  double uniform_open01() {
    for (;;) {
      const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;
    }
  }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r < limit) return r % bound;
    }
  }

  bool coin() { return (engine_() >> 63) != 0; }

private:
  std::mt19937_64 engine_;
};

}  // namespace bincover
