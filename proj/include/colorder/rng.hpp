#pragma once

#include <cstdint>
#include <random>

namespace colorder {

/// Deterministic generator shared by every randomized step (random orders,
/// closeness source sampling, synthetic graphs).
///
/// std::mt19937_64's output sequence is fixed by the standard, but the
/// standard distributions are not, so bounded draws use rejection sampling on
/// the raw 64-bit stream. Bump kName whenever the draw procedure changes.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64+rejection/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace colorder
