#include "pcmi/indices.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "pcmi/error.hpp"

namespace pcmi {
namespace {

using E = Established;
constexpr E S = E::kSatisfied;
constexpr E V = E::kViolated;
constexpr E U = E::kUnknown;
constexpr auto kInc = Orientation::kHigherIsMoreInconsistent;

constexpr std::array<IndexDescriptor, kIndexCount> kRegistry{{
    {IndexId::kK, "K", 0.0, kInc, {S, S, S, S, S, S}},
    {IndexId::kAI, "AI", 0.0, kInc, {S, S, V, S, S, S}},
    {IndexId::kAIStar, "AI_STAR", 0.0, kInc, {S, S, S, S, S, S}},
    {IndexId::kCIH, "CI_H", 1.0, kInc, {S, S, S, S, S, S}},
    {IndexId::kCCI, "CCI", 1.0, Orientation::kHigherIsMoreConsistent,
     {S, S, V, U, S, S}},
    {IndexId::kRE, "RE", 0.0, kInc, {S, S, S, V, V, S}},
    {IndexId::kREStar, "RE_STAR", 0.0, kInc, {S, S, S, S, S, S}},
    {IndexId::kIStar, "I_STAR", 0.0, kInc, {S, S, S, S, S, S}},
    {IndexId::kINot6, "I_NOT6", 0.0, kInc, {S, S, S, S, S, V}},
}};

// Smallest and largest of a_ik * a_kj over k.
std::pair<double, double> estimate_range(const Pcm& m, std::size_t i,
                                         std::size_t j) {
  double lo = m(i, 0) * m(0, j);
  double hi = lo;
  for (std::size_t k = 1; k < m.order(); ++k) {
    const double v = m(i, k) * m(k, j);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

// Row means of the log matrix.
std::vector<double> log_row_means(const Pcm& m) {
  const std::size_t n = m.order();
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) d[i] += std::log(m(i, k));
    d[i] /= static_cast<double>(n);
  }
  return d;
}

double triad_ratio(const Pcm& m, std::size_t i, std::size_t j, std::size_t k) {
  return m(i, k) / (m(i, j) * m(j, k));
}

}  // namespace

std::span<const IndexDescriptor> registry() { return kRegistry; }

const IndexDescriptor& lookup(IndexId id) {
  return kRegistry[static_cast<std::size_t>(id)];
}

std::string_view to_string(IndexId id) { return lookup(id).name; }

std::string_view to_string(Orientation o) {
  return o == Orientation::kHigherIsMoreConsistent
             ? "higher-is-more-consistent"
             : "higher-is-more-inconsistent";
}

std::optional<IndexId> parse_index_id(std::string_view text) {
  std::string key;
  for (char c : text) {
    key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  if (key == "AI*") return IndexId::kAIStar;
  if (key == "RE*") return IndexId::kREStar;
  if (key == "I*") return IndexId::kIStar;
  if (key == "INOT6") return IndexId::kINot6;
  if (key == "CIH") return IndexId::kCIH;
  for (const auto& d : kRegistry) {
    if (key == d.name) return d.id;
  }
  return std::nullopt;
}

AmbiguityMatrix::AmbiguityMatrix(std::size_t order,
                                 std::vector<std::vector<double>> cells)
    : order_(order), cells_(std::move(cells)) {}

AmbiguityMatrix ambiguity_sets(const Pcm& m) {
  const std::size_t n = m.order();
  std::vector<std::vector<double>> cells(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> raw(n);
      for (std::size_t k = 0; k < n; ++k) raw[k] = m(i, k) * m(k, j);
      std::sort(raw.begin(), raw.end());
      auto& cell = cells[i * n + j];
      for (double v : raw) {
        if (cell.empty() || v - cell.back() > kReciprocityTolerance * v) {
          cell.push_back(v);
        }
      }
    }
  }
  return AmbiguityMatrix(n, std::move(cells));
}

Pcm consistent_approximation(const Pcm& m) {
  const std::size_t n = m.order();
  const std::vector<double> d = log_row_means(m);
  std::vector<double> g(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) g[i * n + j] = std::exp(d[i] - d[j]);
    }
  }
  return Pcm::from_entries(n, std::move(g));
}

double index_k(const Pcm& m) {
  const std::size_t n = m.order();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double x = triad_ratio(m, i, j, k);
        worst = std::max(worst,
                         std::min(std::abs(1.0 - x), std::abs(1.0 - 1.0 / x)));
      }
    }
  }
  return worst;
}

double index_ai(const Pcm& m) {
  const std::size_t n = m.order();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto [lo, hi] = estimate_range(m, i, j);
      sum += (hi - lo) / ((1.0 + hi) * (1.0 + lo));
    }
  }
  return 2.0 * sum / static_cast<double>(n * (n - 1));
}

// Sums over every ordered pair; the diagonal cells are {1} and contribute
// nothing. Dropping the lower triangle would break monotonicity under
// intensification.
double index_ai_star(const Pcm& m) {
  const std::size_t n = m.order();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto [lo, hi] = estimate_range(m, i, j);
      sum += hi - lo;
    }
  }
  return sum / static_cast<double>(n * (n - 1));
}

double index_ci_h(const Pcm& m) {
  const std::size_t n = m.order();
  const Pcm g = consistent_approximation(m);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sum += m(i, j) * g(j, i);
  }
  return sum / static_cast<double>(n * n);
}

double index_cci(const Pcm& m) {
  const std::size_t n = m.order();
  std::vector<double> col_norm(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) col_norm[j] += m(k, j) * m(k, j);
  }
  for (double& c : col_norm) c = std::sqrt(c);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += m(i, j) / col_norm[j];
    total += row * row;
  }
  return std::sqrt(total) / static_cast<double>(n);
}

double index_re_star(const Pcm& m) {
  const std::size_t n = m.order();
  const std::vector<double> d = log_row_means(m);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double e = std::log(m(i, j)) - d[i] + d[j];
      sum += e * e;
    }
  }
  return sum;
}

double index_re(const Pcm& m) {
  double denom = 0.0;
  for (double v : m.entries()) {
    const double p = std::log(v);
    denom += p * p;
  }
  if (denom == 0.0) {
    throw Error(ErrorCode::kZeroDenominator,
                "RE is undefined when every entry equals 1");
  }
  return index_re_star(m) / denom;
}

double index_i_star(const Pcm& m) {
  const std::size_t n = m.order();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double x = triad_ratio(m, i, j, k);
        sum += x + 1.0 / x - 2.0;
      }
    }
  }
  return sum;
}

std::size_t dominant_row(const Pcm& m) {
  const std::size_t n = m.order();
  std::size_t row = 0;
  double greatest = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m(i, j) > greatest) {
        greatest = m(i, j);
        row = i;
      }
    }
  }
  return row;
}

double index_i_not6(const Pcm& m) {
  const std::size_t h = dominant_row(m);
  double least = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m.order(); ++j) {
    if (j != h) least = std::min(least, m(h, j) - 1.0);
  }
  return index_i_star(m) * (1.0 + std::max(least, 0.0));
}

double evaluate(IndexId id, const Pcm& m) {
  switch (id) {
    case IndexId::kK: return index_k(m);
    case IndexId::kAI: return index_ai(m);
    case IndexId::kAIStar: return index_ai_star(m);
    case IndexId::kCIH: return index_ci_h(m);
    case IndexId::kCCI: return index_cci(m);
    case IndexId::kRE: return index_re(m);
    case IndexId::kREStar: return index_re_star(m);
    case IndexId::kIStar: return index_i_star(m);
    case IndexId::kINot6: return index_i_not6(m);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown index id");
}

double oriented_value(IndexId id, double value) {
  return lookup(id).orientation == Orientation::kHigherIsMoreConsistent
             ? -value
             : value;
}

}  // namespace pcmi
