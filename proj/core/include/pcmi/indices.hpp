#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pcmi/pcm.hpp"

namespace pcmi {

enum class IndexId {
  kK,
  kAI,
  kAIStar,
  kCIH,
  kCCI,
  kRE,
  kREStar,
  kIStar,
  kINot6,
};

inline constexpr std::size_t kIndexCount = 9;

enum class Orientation {
  kHigherIsMoreInconsistent,
  kHigherIsMoreConsistent,
};

/// Analytical status of a property for an index, as established in the
/// literature. Shown next to the empirical verdicts; never used to decide
/// them.
enum class Established { kSatisfied, kViolated, kUnknown };

struct IndexDescriptor {
  IndexId id;
  std::string_view name;
  double nu;  // value taken exactly on consistent matrices
  Orientation orientation;
  std::array<Established, 6> established;  // P1..P6
};

std::span<const IndexDescriptor> registry();
const IndexDescriptor& lookup(IndexId id);

std::string_view to_string(IndexId id);
std::string_view to_string(Orientation o);
/// Accepts the registry names ("AI_STAR") case-insensitively, plus the
/// short forms "AI*", "RE*", "I*" and "INOT6".
std::optional<IndexId> parse_index_id(std::string_view text);

/// Matrix of indirect estimates r_ij = { a_ik a_kj : k }. Each cell is sorted
/// ascending with values within kReciprocityTolerance (relative) merged.
class AmbiguityMatrix {
 public:
  AmbiguityMatrix(std::size_t order, std::vector<std::vector<double>> cells);

  std::size_t order() const noexcept { return order_; }
  std::span<const double> cell(std::size_t i, std::size_t j) const noexcept {
    return cells_[i * order_ + j];
  }
  double min(std::size_t i, std::size_t j) const noexcept {
    return cells_[i * order_ + j].front();
  }
  double max(std::size_t i, std::size_t j) const noexcept {
    return cells_[i * order_ + j].back();
  }

 private:
  std::size_t order_;
  std::vector<std::vector<double>> cells_;
};

AmbiguityMatrix ambiguity_sets(const Pcm& m);

/// g_ij = (prod_k a_ik a_kj)^(1/n); always consistent.
Pcm consistent_approximation(const Pcm& m);

double index_k(const Pcm& m);
double index_ai(const Pcm& m);
double index_ai_star(const Pcm& m);
double index_ci_h(const Pcm& m);
double index_cci(const Pcm& m);
/// Throws kZeroDenominator when every log-entry is zero (all-ones matrix).
double index_re(const Pcm& m);
/// Natural-log units.
double index_re_star(const Pcm& m);
double index_i_star(const Pcm& m);
double index_i_not6(const Pcm& m);

/// Row holding the greatest off-diagonal entry, smallest row on ties.
std::size_t dominant_row(const Pcm& m);

double evaluate(IndexId id, const Pcm& m);

/// Value mapped so that larger always means more inconsistent.
double oriented_value(IndexId id, double value);

}  // namespace pcmi
