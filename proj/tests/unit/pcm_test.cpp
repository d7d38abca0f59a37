#include <array>
#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "pcmi/generators.hpp"
#include "pcmi/pcm.hpp"
#include "pcmi/reference_matrices.hpp"
#include "support.hpp"

namespace pcmi {
namespace {

using test::error_code_of;
using test::matrices_near;

TEST(Pcm, AcceptsReciprocalMatrices) {
  const Pcm a = Pcm::from_rows({{1, 2, 8}, {1.0 / 2, 1, 2}, {1.0 / 8, 1.0 / 2, 1}});
  EXPECT_EQ(a.order(), 3u);
  EXPECT_EQ(a(0, 2), 8.0);
  EXPECT_EQ(a(2, 0), 0.125);
  const Pcm ones = Pcm::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  EXPECT_EQ(ones(1, 2), 1.0);
}

TEST(Pcm, ReportsReciprocityViolationLocation) {
  try {
    Pcm::from_rows({{1, 2, 8}, {1.0 / 2, 1, 2}, {1.0 / 8, 1.0 / 3, 1}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReciprocityViolation);
    ASSERT_TRUE(e.entry().has_value());
    EXPECT_EQ(e.entry()->row, 1u);
    EXPECT_EQ(e.entry()->col, 2u);
  }
}

TEST(Pcm, RejectsMalformedInput) {
  EXPECT_EQ(error_code_of([] { Pcm::from_rows({{1, 2}, {0.5, 1}}); }),
            ErrorCode::kOrderTooSmall);
  EXPECT_EQ(error_code_of([] { Pcm::from_rows({{1, 2, 3}, {0.5, 1, 1}, {1, 1}}); }),
            ErrorCode::kNonSquare);
  EXPECT_EQ(error_code_of([] { Pcm::from_rows({{1, -2, 1}, {-0.5, 1, 1}, {1, 1, 1}}); }),
            ErrorCode::kNonPositiveEntry);
  EXPECT_EQ(error_code_of([] { Pcm::from_rows({{1, 0, 1}, {1, 1, 1}, {1, 1, 1}}); }),
            ErrorCode::kNonPositiveEntry);
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(error_code_of([&] { Pcm::from_rows({{1, inf, 1}, {0, 1, 1}, {1, 1, 1}}); }),
            ErrorCode::kNonFiniteEntry);
  EXPECT_EQ(error_code_of([] { Pcm::from_rows({{2, 1, 1}, {1, 0.5, 1}, {1, 1, 1}}); }),
            ErrorCode::kReciprocityViolation);
}

TEST(Pcm, IsConsistent) {
  const std::array<double, 3> w{1, 2, 4};
  EXPECT_TRUE(is_consistent(consistent_from_weights(w), 1e-9));
  EXPECT_FALSE(is_consistent(reference::ai_intensification_counterexample(), 1e-9));
  EXPECT_FALSE(is_consistent(reference::inversion_example(), 1e-9));
  EXPECT_EQ(error_code_of([&] { is_consistent(reference::inversion_example(), 0.0); }),
            ErrorCode::kInvalidArgument);
}

TEST(Pcm, ConsistentFromWeights) {
  const std::array<double, 3> ones{1, 1, 1};
  EXPECT_EQ(consistent_from_weights(ones),
            Pcm::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  const std::array<double, 3> w{4, 2, 1};
  EXPECT_TRUE(matrices_near(consistent_from_weights(w),
                            Pcm::from_rows({{1, 2, 4}, {0.5, 1, 2}, {0.25, 0.5, 1}})));
}

TEST(Pcm, ConsistentFromChain) {
  const std::array<double, 2> c22{2, 2};
  const std::array<double, 3> w{4, 2, 1};
  EXPECT_TRUE(matrices_near(consistent_from_chain(c22), consistent_from_weights(w)));
  const std::array<double, 3> c111{1, 1, 1};
  EXPECT_EQ(consistent_from_chain(c111), consistent_from_weights(std::array<double, 4>{1, 1, 1, 1}));
  const std::array<double, 2> c23{2, 3};
  EXPECT_TRUE(matrices_near(
      consistent_from_chain(c23),
      Pcm::from_rows({{1, 2, 6}, {0.5, 1, 3}, {1.0 / 6, 1.0 / 3, 1}})));
}

TEST(Pcm, PermuteAndTranspose) {
  const Pcm a = reference::inversion_example();
  EXPECT_EQ(permute(a, Permutation::identity(3)), a);
  const Pcm swapped = permute(a, Permutation::transposition(3, 0, 1));
  EXPECT_TRUE(matrices_near(
      swapped, Pcm::from_rows({{1, 2, 1.0 / 3}, {0.5, 1, 0.25}, {3, 4, 1}})));
  const auto t = Permutation::transposition(3, 1, 2);
  EXPECT_EQ(permute(permute(a, t), t), a);

  EXPECT_TRUE(matrices_near(
      transpose(a), Pcm::from_rows({{1, 2, 4}, {0.5, 1, 3}, {0.25, 1.0 / 3, 1}})));
  const Pcm ones = Pcm::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  EXPECT_EQ(transpose(ones), ones);
  EXPECT_EQ(error_code_of([&] { permute(a, Permutation::identity(4)); }),
            ErrorCode::kOrderMismatch);
  EXPECT_EQ(error_code_of([] { Permutation({0, 0, 1}); }), ErrorCode::kInvalidPermutation);
}

TEST(Pcm, Intensify) {
  const Pcm a = reference::ai_intensification_counterexample();
  EXPECT_EQ(intensify(a, 1.0), a);
  EXPECT_TRUE(matrices_near(
      intensify(a, 2.0),
      Pcm::from_rows({{1, 4, 64}, {0.25, 1, 4}, {1.0 / 64, 0.25, 1}})));
  EXPECT_TRUE(matrices_near(
      intensify(a, 3.0),
      Pcm::from_rows({{1, 8, 512}, {1.0 / 8, 1, 8}, {1.0 / 512, 1.0 / 8, 1}})));
  EXPECT_EQ(error_code_of([&] { intensify(a, 0.0); }), ErrorCode::kInvalidArgument);
  EXPECT_TRUE(is_intensification_exponent(1.0));
  EXPECT_FALSE(is_intensification_exponent(0.5));
}

TEST(Pcm, PerturbEntry) {
  const Pcm base = consistent_from_weights(std::array<double, 3>{4, 2, 1});
  EXPECT_EQ(perturb_entry(base, 0, 2, 1.0), base);
  const Pcm p = perturb_entry(base, 0, 2, 2.0);
  EXPECT_DOUBLE_EQ(p(0, 2), 16.0);
  EXPECT_DOUBLE_EQ(p(2, 0), 1.0 / 16);
  EXPECT_EQ(p(0, 1), base(0, 1));
  EXPECT_EQ(p(1, 2), base(1, 2));
  EXPECT_FALSE(is_consistent(p, 1e-9));

  const Pcm ones = consistent_from_weights(std::array<double, 3>{1, 1, 1});
  EXPECT_EQ(error_code_of([&] { perturb_entry(ones, 0, 1, 2.0); }), ErrorCode::kUnitEntry);
  EXPECT_EQ(error_code_of([&] { perturb_entry(base, 1, 1, 2.0); }), ErrorCode::kDiagonalEntry);
  EXPECT_EQ(error_code_of([&] { perturb_entry(base, 0, 3, 2.0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_code_of([&] { perturb_entry(base, 0, 1, -1.0); }), ErrorCode::kInvalidArgument);
}

// Properties over random matrices.

TEST(PcmProperty, TransposeIsAnInvolution) {
  SplitMix64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Pcm m = random_pcm(3 + t % 5, rng);
    EXPECT_EQ(transpose(transpose(m)), m);
  }
}

TEST(PcmProperty, PermuteComposesWithInverse) {
  SplitMix64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + t % 5;
    const Pcm m = random_pcm(n, rng);
    const Permutation p = random_permutation(n, rng);
    EXPECT_EQ(permute(permute(m, p), p.inverse()), m);
  }
}

TEST(PcmProperty, IntensifyComposes) {
  SplitMix64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const Pcm m = random_pcm(3 + t % 5, rng);
    const double b = rng.uniform(1.0, 3.0);
    const double c = rng.uniform(1.0, 3.0);
    EXPECT_TRUE(matrices_near(intensify(intensify(m, b), c), intensify(m, b * c), 1e-12));
  }
}

TEST(PcmProperty, IntensifyPreservesConsistency) {
  SplitMix64 rng(14);
  for (int t = 0; t < 200; ++t) {
    const Pcm m = random_consistent(3 + t % 5, rng);
    EXPECT_TRUE(is_consistent(intensify(m, rng.uniform(1.0, 4.0)), 1e-9));
  }
}

TEST(PcmProperty, PermutationPreservesConsistency) {
  SplitMix64 rng(15);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + t % 5;
    const Pcm m = random_consistent(n, rng);
    EXPECT_TRUE(is_consistent(permute(m, random_permutation(n, rng)), 1e-9));
    EXPECT_TRUE(is_consistent(transpose(m), 1e-9));
  }
}

}  // namespace
}  // namespace pcmi
