#include "pcmi/generators.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pcmi/error.hpp"

namespace pcmi {
namespace {

void require_order(std::size_t n) {
  if (n < kMinOrder) {
    throw Error(ErrorCode::kOrderTooSmall,
                "order " + std::to_string(n) + " is below the minimum of 3");
  }
}

double random_judgment(SplitMix64& rng) {
  const double span = std::log(kJudgmentScale);
  return std::exp(rng.uniform(-span, span));
}

}  // namespace

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  // Rejection sampling removes the modulo bias.
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> tags) noexcept {
  SplitMix64 mix(base);
  std::uint64_t h = mix();
  for (std::uint64_t t : tags) {
    SplitMix64 step(h ^ (t + 0x632be59bd9b4e019ULL));
    h = step();
  }
  return h;
}

std::vector<double> random_weights(std::size_t n, SplitMix64& rng) {
  require_order(n);
  std::vector<double> w(n);
  for (double& v : w) v = random_judgment(rng);
  return w;
}

std::vector<double> random_weights(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_weights(n, rng);
}

Pcm random_pcm(std::size_t n, SplitMix64& rng) {
  require_order(n);
  std::vector<double> a(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = random_judgment(rng);
      a[i * n + j] = v;
      a[j * n + i] = 1.0 / v;
    }
  }
  return Pcm::from_entries(n, std::move(a));
}

Pcm random_pcm(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_pcm(n, rng);
}

Pcm random_consistent(std::size_t n, SplitMix64& rng) {
  return consistent_from_weights(random_weights(n, rng));
}

Pcm random_consistent(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_consistent(n, rng);
}

Permutation random_permutation(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(m[i - 1], m[rng.below(i)]);
  }
  return Permutation(std::move(m));
}

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_permutation(n, rng);
}

}  // namespace pcmi
