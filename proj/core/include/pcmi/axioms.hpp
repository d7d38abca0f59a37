#pragma once

// Empirical checkers for the six inconsistency-index properties:
//   P1  a unique value nu on exactly the consistent matrices
//   P2  invariance under reordering of the alternatives (P A P^T)
//   P3  intensification A(b) = (a_ij^b), b >= 1, never lowers inconsistency
//   P4  pushing one entry of a consistent matrix away (a_pq^delta) never
//       lowers inconsistency on either side of delta = 1
//   P5  continuity in the entries (heuristic only)
//   P6  invariance under inversion of preferences (A^T)
//
// A checker can only ever find violations. kNoViolationFound means "none in
// the trials that were run", not that the property holds.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcmi/indices.hpp"
#include "pcmi/pcm.hpp"

namespace pcmi {

enum class Property { kP1, kP2, kP3, kP4, kP5, kP6 };

inline constexpr std::array<Property, 6> kAllProperties{
    Property::kP1, Property::kP2, Property::kP3,
    Property::kP4, Property::kP5, Property::kP6};

std::string_view to_string(Property p);
std::optional<Property> parse_property(std::string_view text);

enum class VerdictStatus {
  kNoViolationFound,
  kViolationFound,
  kHeuristic,
  kNotApplicable,
};

/// "ok", "violated", "heuristic", "n/a".
std::string_view to_string(VerdictStatus s);
std::optional<VerdictStatus> parse_verdict_status(std::string_view text);

std::vector<double> default_b_grid();      // 41 points on [1, 5]
std::vector<double> default_delta_grid();  // 0.1..0.9, 1.1..3.0 step 0.1

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t trials_per_check = 1000;  // per order
  std::vector<std::size_t> orders{3, 4, 5, 6, 7};
  std::vector<double> b_grid = default_b_grid();
  std::vector<double> delta_grid = default_delta_grid();
  double nu_tolerance = 1e-7;
  double equality_tolerance = 1e-9;  // relative
  double monotonicity_slack = 1e-12;  // absolute

  /// Throws pcmi::Error(kInvalidConfig) describing the first problem.
  void validate() const;

  friend bool operator==(const SuiteConfig&, const SuiteConfig&) = default;
};

/// Everything needed to re-run the failing comparison. Matrix indices in
/// `parameters` ("p", "q") and `permutation` are zero-based.
struct Witness {
  Pcm matrix;
  std::vector<std::size_t> permutation;
  std::map<std::string, double> parameters;
  std::map<std::string, double> observed;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PropertyVerdict {
  VerdictStatus status = VerdictStatus::kNotApplicable;
  std::optional<Witness> witness;
  std::size_t trials = 0;

  friend bool operator==(const PropertyVerdict&,
                         const PropertyVerdict&) = default;
};

struct IndexVerdicts {
  IndexId id;
  std::array<PropertyVerdict, 6> by_property;

  friend bool operator==(const IndexVerdicts&, const IndexVerdicts&) = default;
};

struct AxiomReport {
  SuiteConfig config;
  std::vector<IndexVerdicts> rows;

  /// Throws kInvalidArgument if `id` is not part of the report.
  const PropertyVerdict& at(IndexId id, Property p) const;

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

PropertyVerdict check_p1(IndexId id, const SuiteConfig& cfg);
PropertyVerdict check_p2(IndexId id, const SuiteConfig& cfg);
PropertyVerdict check_p3(IndexId id, const SuiteConfig& cfg);
PropertyVerdict check_p4(IndexId id, const SuiteConfig& cfg);
PropertyVerdict check_p5(IndexId id, const SuiteConfig& cfg);
PropertyVerdict check_p6(IndexId id, const SuiteConfig& cfg);
PropertyVerdict check_property(IndexId id, Property p, const SuiteConfig& cfg);

/// Re-evaluates the index on a stored witness and reports whether the
/// violating comparison still shows up under cfg's tolerances.
bool recheck_witness(IndexId id, Property p, const Witness& w,
                     const SuiteConfig& cfg);

/// Runs all six checkers for each index. Cells run on up to `threads`
/// workers (0 = hardware concurrency); results do not depend on it.
AxiomReport run_suite(std::span<const IndexId> ids, const SuiteConfig& cfg,
                      unsigned threads = 0);

struct CurveSample {
  double parameter;
  double value;

  friend bool operator==(const CurveSample&, const CurveSample&) = default;
};

struct CurveSeries {
  IndexId index;
  Pcm base;
  std::string parameter;  // "b" or "delta"
  std::optional<std::pair<std::size_t, std::size_t>> entry;  // (p, q) for delta
  std::vector<CurveSample> samples;
};

/// Samples value(intensify(m, b)) over a strictly increasing positive grid.
CurveSeries curve_intensification(IndexId id, const Pcm& m,
                                  std::span<const double> grid);

/// Samples value(perturb_entry(m, p, q, delta)). Throws kInconsistentBase
/// unless m is consistent at 1e-9 and kUnitEntry when a_pq == 1.
CurveSeries curve_perturbation(IndexId id, const Pcm& m, std::size_t p,
                               std::size_t q, std::span<const double> grid);

}  // namespace pcmi
