#pragma once

#include <cstdint>

namespace zigzag {

/// SplitMix64 finalizer. Used both as a counter-based hash (seed, index) and
/// as the state transition of SplitMix64 below.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t hash_pair(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

/// Small deterministic generator. Its output, and the derived uniform
/// doubles, are identical on every platform (unlike std:: distributions).
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Uniform in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  constexpr double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Uniform in [0, n). n must be positive; the modulo bias is negligible
  /// for the sizes used here.
  constexpr std::uint64_t below(std::uint64_t n) noexcept { return (*this)() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace zigzag
