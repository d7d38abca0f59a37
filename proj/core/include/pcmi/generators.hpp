#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <vector>

#include "pcmi/pcm.hpp"

namespace pcmi {

/// SplitMix64. Fixed algorithm so that seeded
/// runs reproduce bit-for-bit on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform01();
  }
  /// Uniform on {0, ..., bound-1}; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

/// Mixes a base seed with a sequence of tags into an independent seed.
std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> tags) noexcept;

/// Judgments are drawn as exp(u), u ~ U[-ln 9, ln 9].
inline constexpr double kJudgmentScale = 9.0;

std::vector<double> random_weights(std::size_t n, SplitMix64& rng);
std::vector<double> random_weights(std::size_t n, std::uint64_t seed);

Pcm random_pcm(std::size_t n, SplitMix64& rng);
Pcm random_pcm(std::size_t n, std::uint64_t seed);

Pcm random_consistent(std::size_t n, SplitMix64& rng);
Pcm random_consistent(std::size_t n, std::uint64_t seed);

/// Fisher-Yates shuffle driven by SplitMix64.
Permutation random_permutation(std::size_t n, SplitMix64& rng);
Permutation random_permutation(std::size_t n, std::uint64_t seed);

}  // namespace pcmi
