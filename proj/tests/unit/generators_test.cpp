#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "pcmi/generators.hpp"
#include "pcmi/indices.hpp"

namespace pcmi {
namespace {

TEST(Generators, SameSeedSameOutput) {
  EXPECT_EQ(random_weights(5, 99), random_weights(5, 99));
  EXPECT_EQ(random_pcm(6, 99), random_pcm(6, 99));
  EXPECT_EQ(random_consistent(6, 99), random_consistent(6, 99));
  EXPECT_EQ(random_permutation(6, 99), random_permutation(6, 99));
  EXPECT_NE(random_pcm(6, 99), random_pcm(6, 100));
}

TEST(Generators, DeriveSeedSeparatesTags) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t a = 0; a < 10; ++a) {
    for (std::uint64_t b = 0; b < 10; ++b) seen.insert(derive_seed(1, {a, b}));
  }
  EXPECT_EQ(seen.size(), 100u);
  EXPECT_EQ(derive_seed(5, {1, 2}), derive_seed(5, {1, 2}));
  EXPECT_NE(derive_seed(5, {1, 2}), derive_seed(5, {2, 1}));
}

TEST(Generators, WeightsStayOnTheJudgmentScale) {
  SplitMix64 rng(3);
  for (int t = 0; t < 500; ++t) {
    for (double w : random_weights(7, rng)) {
      EXPECT_GE(w, 1.0 / kJudgmentScale);
      EXPECT_LE(w, kJudgmentScale);
    }
  }
}

TEST(Generators, RandomPcmIsAlmostSurelyInconsistent) {
  SplitMix64 rng(4);
  for (int t = 0; t < 1000; ++t) {
    EXPECT_GT(index_k(random_pcm(3 + t % 5, rng)), 0.0);
  }
}

TEST(Generators, RandomConsistentIsConsistent) {
  SplitMix64 rng(5);
  for (int t = 0; t < 500; ++t) {
    EXPECT_TRUE(is_consistent(random_consistent(3 + t % 5, rng), 1e-9));
  }
}

TEST(Generators, PermutationsAreUniform) {
  SplitMix64 rng(6);
  std::map<std::vector<std::size_t>, int> counts;
  const int draws = 6000;
  for (int t = 0; t < draws; ++t) {
    const auto p = random_permutation(3, rng);
    counts[{p.mapping().begin(), p.mapping().end()}]++;
  }
  ASSERT_EQ(counts.size(), 6u);
  for (const auto& [perm, c] : counts) {
    EXPECT_NEAR(static_cast<double>(c) / draws, 1.0 / 6, 0.02);
  }
}

TEST(Generators, SingletonPermutationIsIdentity) {
  EXPECT_EQ(random_permutation(1, 8), Permutation::identity(1));
}

TEST(Generators, BelowStaysInRange) {
  SplitMix64 rng(9);
  std::vector<int> hits(7, 0);
  for (int t = 0; t < 7000; ++t) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    hits[v]++;
  }
  for (int h : hits) EXPECT_NEAR(h, 1000, 150);
}

TEST(Generators, UniformIsHalfOpen) {
  SplitMix64 rng(10);
  double lo = 1.0;
  double hi = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  EXPECT_LT(lo, 0.01);
  EXPECT_GT(hi, 0.99);
}

}  // namespace
}  // namespace pcmi
