#include <algorithm>
#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "pcmi/axioms.hpp"
#include "pcmi/generators.hpp"
#include "pcmi/reference_matrices.hpp"
#include "support.hpp"

namespace pcmi {
namespace {

using test::error_code_of;

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.trials_per_check = 50;
  return cfg;
}

TEST(SuiteConfig, DefaultsAreValid) {
  const SuiteConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_EQ(cfg.b_grid.size(), 41u);
  EXPECT_EQ(cfg.b_grid.front(), 1.0);
  EXPECT_EQ(cfg.b_grid.back(), 5.0);
  EXPECT_EQ(cfg.delta_grid.size(), 29u);
  EXPECT_EQ(cfg.delta_grid.front(), 0.1);
  EXPECT_DOUBLE_EQ(cfg.delta_grid.back(), 3.0);
}

TEST(SuiteConfig, RejectsBadValues) {
  auto code = [](auto mutate) {
    SuiteConfig cfg;
    mutate(cfg);
    return error_code_of([&] { cfg.validate(); });
  };
  EXPECT_EQ(code([](SuiteConfig& c) { c.trials_per_check = 0; }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code([](SuiteConfig& c) { c.orders = {}; }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code([](SuiteConfig& c) { c.orders = {2, 3}; }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code([](SuiteConfig& c) { c.b_grid = {1, 3, 2}; }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code([](SuiteConfig& c) { c.b_grid = {0.5, 2}; }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code([](SuiteConfig& c) { c.delta_grid = {}; }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code([](SuiteConfig& c) { c.delta_grid = {0.5, 1.0, 2.0}; }),
            ErrorCode::kInvalidConfig);
  EXPECT_EQ(code([](SuiteConfig& c) { c.delta_grid = {0.5, 0.99, 2.0}; }),
            ErrorCode::kInvalidConfig);
  EXPECT_EQ(code([](SuiteConfig& c) { c.nu_tolerance = 0; }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code([](SuiteConfig& c) { c.equality_tolerance = -1; }), ErrorCode::kInvalidConfig);
}

TEST(Names, RoundTrip) {
  for (Property p : kAllProperties) EXPECT_EQ(parse_property(to_string(p)), p);
  EXPECT_EQ(parse_property("p3"), Property::kP3);
  EXPECT_FALSE(parse_property("P7").has_value());
  for (auto s : {VerdictStatus::kNoViolationFound, VerdictStatus::kViolationFound,
                 VerdictStatus::kHeuristic, VerdictStatus::kNotApplicable}) {
    EXPECT_EQ(parse_verdict_status(to_string(s)), s);
  }
  EXPECT_EQ(to_string(VerdictStatus::kViolationFound), "violated");
  EXPECT_EQ(to_string(VerdictStatus::kNotApplicable), "n/a");
}

TEST(CheckP1, CiHTakesOneOnConsistentMatrices) {
  const auto v = check_p1(IndexId::kCIH, small_config());
  EXPECT_EQ(v.status, VerdictStatus::kNoViolationFound);
  EXPECT_GT(v.trials, 0u);
}

TEST(CheckP2, PermutationInvariantIndices) {
  for (IndexId id : {IndexId::kK, IndexId::kINot6, IndexId::kCCI}) {
    EXPECT_EQ(check_p2(id, small_config()).status, VerdictStatus::kNoViolationFound)
        << to_string(id);
  }
}

TEST(CheckP3, AiWitnessIsTheSeededPair) {
  const auto v = check_p3(IndexId::kAI, small_config());
  ASSERT_EQ(v.status, VerdictStatus::kViolationFound);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->matrix, reference::ai_intensification_counterexample());
  EXPECT_EQ(v.witness->parameters.at("b_from"), 2.0);
  EXPECT_EQ(v.witness->parameters.at("b_to"), 3.0);
  EXPECT_NEAR(v.witness->observed.at("value_from"), 0.1086, 1e-4);
  EXPECT_NEAR(v.witness->observed.at("value_to"), 0.0683, 1e-4);
}

TEST(CheckP3, CciViolatesOnItsCounterexample) {
  SuiteConfig cfg = small_config();
  cfg.trials_per_check = 1;
  const auto v = check_p3(IndexId::kCCI, cfg);
  ASSERT_EQ(v.status, VerdictStatus::kViolationFound);
  EXPECT_TRUE(recheck_witness(IndexId::kCCI, Property::kP3, *v.witness, cfg));
}

TEST(CheckP3, ReStarNeverDecreases) {
  EXPECT_EQ(check_p3(IndexId::kREStar, small_config()).status,
            VerdictStatus::kNoViolationFound);
}

TEST(CheckP4, KNeverDecreases) {
  EXPECT_EQ(check_p4(IndexId::kK, small_config()).status, VerdictStatus::kNoViolationFound);
}

TEST(CheckP5, KIsAHeuristicPass) {
  EXPECT_EQ(check_p5(IndexId::kK, small_config()).status, VerdictStatus::kHeuristic);
}

TEST(CheckP5, ReIsUndefinedAtAllOnes) {
  const auto v = check_p5(IndexId::kRE, small_config());
  ASSERT_EQ(v.status, VerdictStatus::kViolationFound);
  EXPECT_EQ(v.witness->matrix, consistent_from_weights(std::array<double, 3>{1, 1, 1}));
}

TEST(CheckP6, KIsTransposeInvariant) {
  EXPECT_EQ(check_p6(IndexId::kK, small_config()).status, VerdictStatus::kNoViolationFound);
}

TEST(CheckP6, INot6WitnessIsTheInversionExample) {
  const auto v = check_p6(IndexId::kINot6, small_config());
  ASSERT_EQ(v.status, VerdictStatus::kViolationFound);
  EXPECT_EQ(v.witness->matrix, reference::inversion_example());
  EXPECT_NEAR(v.witness->observed.at("value"), 0.5, 1e-9);
  EXPECT_NEAR(v.witness->observed.at("value_transposed"), 1.0 / 3, 1e-9);
}

TEST(Suite, EveryViolationHasARecheckableWitness) {
  std::vector<IndexId> ids;
  for (const auto& d : registry()) ids.push_back(d.id);
  const SuiteConfig cfg = small_config();
  const AxiomReport report = run_suite(ids, cfg, 1);
  ASSERT_EQ(report.rows.size(), ids.size());
  int violations = 0;
  for (const auto& row : report.rows) {
    for (Property p : kAllProperties) {
      const auto& v = row.by_property[static_cast<std::size_t>(p)];
      EXPECT_EQ(v.status == VerdictStatus::kViolationFound, v.witness.has_value());
      EXPECT_GT(v.trials, 0u);
      if (!v.witness) continue;
      ++violations;
      EXPECT_TRUE(recheck_witness(row.id, p, *v.witness, cfg))
          << to_string(row.id) << " " << to_string(p);
    }
  }
  EXPECT_GE(violations, 4);
}

TEST(Suite, ThreadCountDoesNotChangeTheReport) {
  const std::array ids{IndexId::kK, IndexId::kAI, IndexId::kCCI, IndexId::kINot6};
  const SuiteConfig cfg = small_config();
  EXPECT_EQ(run_suite(ids, cfg, 1), run_suite(ids, cfg, 4));
}

TEST(Suite, CellsAreIndependentOfTheIndexSelection) {
  const SuiteConfig cfg = small_config();
  const std::array one{IndexId::kCIH};
  const std::array two{IndexId::kK, IndexId::kCIH};
  EXPECT_EQ(run_suite(one, cfg, 1).rows[0], run_suite(two, cfg, 1).rows[1]);
}

TEST(Suite, SeedChangesTrials) {
  SuiteConfig a = small_config();
  SuiteConfig b = small_config();
  b.seed = 2;
  const std::array ids{IndexId::kINot6};
  const auto ra = run_suite(ids, a, 1);
  const auto rb = run_suite(ids, b, 1);
  EXPECT_NE(ra.config, rb.config);
  EXPECT_EQ(ra.at(IndexId::kINot6, Property::kP6).status, VerdictStatus::kViolationFound);
}

TEST(Suite, RejectsEmptySelectionAndUnknownRows) {
  const std::vector<IndexId> none;
  EXPECT_EQ(error_code_of([&] { run_suite(none, small_config()); }),
            ErrorCode::kInvalidArgument);
  const std::array ids{IndexId::kK};
  SuiteConfig cfg = small_config();
  cfg.trials_per_check = 1;
  const auto report = run_suite(ids, cfg, 1);
  EXPECT_EQ(error_code_of([&] { report.at(IndexId::kAI, Property::kP1); }),
            ErrorCode::kInvalidArgument);
}

// ---- curves ---------------------------------------------------------------

TEST(Curves, AiHasAnInteriorMaximumThenDecays) {
  const Pcm a = reference::ai_intensification_counterexample();
  const auto s = curve_intensification(IndexId::kAI, a, default_b_grid());
  const auto peak = std::max_element(s.samples.begin(), s.samples.end(),
                                     [](auto x, auto y) { return x.value < y.value; });
  EXPECT_GT(peak - s.samples.begin(), 0);
  EXPECT_LT(peak - s.samples.begin(), static_cast<long>(s.samples.size()) - 1);
  for (auto it = peak; it + 1 != s.samples.end(); ++it) EXPECT_LT((it + 1)->value, it->value);
  EXPECT_LT(s.samples.back().value, 0.5 * peak->value);
}

TEST(Curves, AiStarIsNonDecreasing) {
  const Pcm a = reference::ai_intensification_counterexample();
  const auto s = curve_intensification(IndexId::kAIStar, a, default_b_grid());
  for (std::size_t k = 1; k < s.samples.size(); ++k) {
    EXPECT_GE(s.samples[k].value, s.samples[k - 1].value);
  }
}

TEST(Curves, FirstIntensificationSampleIsTheBaseValue) {
  const Pcm a = reference::inversion_example();
  for (const auto& d : registry()) {
    const auto s = curve_intensification(d.id, a, default_b_grid());
    EXPECT_EQ(s.parameter, "b");
    EXPECT_EQ(s.samples.front().parameter, 1.0);
    EXPECT_EQ(s.samples.front().value, evaluate(d.id, a));
  }
}

TEST(Curves, ReStarPerturbationClosedForm) {
  const Pcm base = consistent_from_weights(std::array<double, 3>{4, 2, 1});
  const auto grid = default_delta_grid();
  const auto s = curve_perturbation(IndexId::kREStar, base, 0, 2, grid);
  ASSERT_EQ(s.entry, (std::pair<std::size_t, std::size_t>{0, 2}));
  const double n = 3.0;
  for (const auto& sample : s.samples) {
    const double xi = (sample.parameter - 1.0) * std::log(4.0);
    EXPECT_NEAR(sample.value, xi * xi * 2.0 * (n - 2.0) / n, 1e-12);
  }
}

TEST(Curves, KIsVShapedAroundOne) {
  const Pcm base = consistent_from_weights(std::array<double, 4>{8, 4, 2, 1});
  const std::vector<double> grid{0.5, 0.7, 0.9, 1.0, 1.1, 1.5, 2.0};
  const auto s = curve_perturbation(IndexId::kK, base, 1, 3, grid);
  EXPECT_NEAR(s.samples[3].value, 0.0, 1e-12);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_GT(s.samples[k].value, s.samples[k + 1].value);
  for (std::size_t k = 3; k + 1 < s.samples.size(); ++k) {
    EXPECT_LT(s.samples[k].value, s.samples[k + 1].value);
  }
}

TEST(Curves, DeltaOneGivesNu) {
  const Pcm base = consistent_from_weights(std::array<double, 3>{5, 2, 1});
  const std::vector<double> grid{0.5, 1.0, 2.0};
  for (const auto& d : registry()) {
    const auto s = curve_perturbation(d.id, base, 0, 1, grid);
    EXPECT_NEAR(s.samples[1].value, d.nu, 1e-12) << d.name;
  }
}

TEST(Curves, RejectBadInputs) {
  const Pcm base = consistent_from_weights(std::array<double, 3>{5, 2, 1});
  const std::vector<double> grid{0.5, 2.0};
  EXPECT_EQ(error_code_of([&] {
              curve_perturbation(IndexId::kK, reference::inversion_example(), 0, 1, grid);
            }),
            ErrorCode::kInconsistentBase);
  const Pcm ones = consistent_from_weights(std::array<double, 3>{1, 1, 1});
  EXPECT_EQ(error_code_of([&] { curve_perturbation(IndexId::kK, ones, 0, 1, grid); }),
            ErrorCode::kUnitEntry);
  const std::vector<double> unsorted{2.0, 1.0};
  EXPECT_EQ(error_code_of([&] { curve_intensification(IndexId::kK, base, unsorted); }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace pcmi
