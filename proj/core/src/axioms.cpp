#include "pcmi/axioms.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <exception>
#include <set>
#include <thread>
#include <tuple>

#include "pcmi/error.hpp"
#include "pcmi/generators.hpp"
#include "pcmi/reference_matrices.hpp"

namespace pcmi {
namespace {

// P1 pushes entries whose log-magnitude is at least this large, so that the
// perturbed matrix sits measurably away from nu for every index.
constexpr double kP1MinLogMagnitude = 0.6931471805599453;  // ln 2

constexpr std::array<double, 4> kContinuityEpsilons{1e-2, 1e-4, 1e-6, 1e-8};
constexpr double kContinuityThreshold = 1e-6;

std::optional<double> try_evaluate(IndexId id, const Pcm& m) {
  try {
    return evaluate(id, m);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kZeroDenominator) return std::nullopt;
    throw;
  }
}

bool relatively_equal(double a, double b, double tol) {
  if (a == b) return true;
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

std::uint64_t cell_seed(const SuiteConfig& cfg, IndexId id, Property p,
                        std::size_t n) {
  return derive_seed(cfg.seed, {static_cast<std::uint64_t>(id) + 1,
                                static_cast<std::uint64_t>(p) + 1, n});
}

PropertyVerdict violated(Witness w, std::size_t trials) {
  return {VerdictStatus::kViolationFound, std::move(w), trials};
}

PropertyVerdict clean(std::size_t trials) {
  return {VerdictStatus::kNoViolationFound, std::nullopt, trials};
}

Witness undefined_at(const Pcm& m, std::string what) {
  return Witness{m, {}, {}, {}, "index undefined at " + std::move(what)};
}

std::string eps_key(double eps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "eps_%.0e", eps);
  return buf;
}

constexpr double kDeltaExclusionLow = 0.95;
constexpr double kDeltaExclusionHigh = 1.05;

// ---- P1 -------------------------------------------------------------------

std::optional<Witness> p1_consistent_sample(IndexId id, const Pcm& m,
                                            const SuiteConfig& cfg) {
  const double nu = lookup(id).nu;
  const auto v = try_evaluate(id, m);
  if (!v) return undefined_at(m, "a consistent matrix");
  if (std::abs(*v - nu) > cfg.nu_tolerance) {
    return Witness{m,
                   {},
                   {{"consistent", 1.0}},
                   {{"value", *v}, {"nu", nu}},
                   "consistent matrix where the index differs from nu"};
  }
  return std::nullopt;
}

std::optional<Witness> p1_inconsistent_sample(
    IndexId id, const Pcm& m, const SuiteConfig& cfg,
    std::map<std::string, double> params) {
  const double nu = lookup(id).nu;
  const auto v = try_evaluate(id, m);
  if (!v) return undefined_at(m, "an inconsistent matrix");
  if (std::abs(*v - nu) <= cfg.nu_tolerance) {
    params["consistent"] = 0.0;
    return Witness{m,
                   {},
                   std::move(params),
                   {{"value", *v}, {"nu", nu}},
                   "inconsistent matrix where the index equals nu"};
  }
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> pick_pair(const Pcm& m, SplitMix64& rng,
                                              double min_log) {
  const std::size_t n = m.order();
  std::vector<std::pair<std::size_t, std::size_t>> eligible;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q && m(p, q) != 1.0 && std::abs(std::log(m(p, q))) >= min_log) {
        eligible.emplace_back(p, q);
      }
    }
  }
  if (eligible.empty()) return {n, n};
  return eligible[rng.below(eligible.size())];
}

// Draws a consistent base together with an entry that can be pushed.
std::tuple<Pcm, std::size_t, std::size_t> consistent_with_pair(
    std::size_t n, SplitMix64& rng, double min_log) {
  for (;;) {
    Pcm base = random_consistent(n, rng);
    const auto [p, q] = pick_pair(base, rng, min_log);
    if (p < n) return {std::move(base), p, q};
  }
}

// ---- P2 -------------------------------------------------------------------

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  std::vector<Permutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

std::vector<Permutation> permutations_for(std::size_t n, std::size_t trials,
                                          SplitMix64& rng) {
  if (n <= 4 || factorial(n) <= trials) return all_permutations(n);
  std::set<std::vector<std::size_t>> seen;
  std::vector<Permutation> out;
  while (out.size() < trials) {
    Permutation p = random_permutation(n, rng);
    std::vector<std::size_t> key(p.mapping().begin(), p.mapping().end());
    if (seen.insert(key).second) out.push_back(std::move(p));
  }
  return out;
}

std::optional<Witness> p2_sample(IndexId id, const Pcm& m,
                                 const Permutation& perm,
                                 const SuiteConfig& cfg) {
  const auto v = try_evaluate(id, m);
  const auto vp = try_evaluate(id, permute(m, perm));
  std::vector<std::size_t> mapping(perm.mapping().begin(),
                                   perm.mapping().end());
  if (!v || !vp) {
    if (v.has_value() == vp.has_value()) return std::nullopt;
    Witness w = undefined_at(m, "only one of the two orderings");
    w.permutation = std::move(mapping);
    return w;
  }
  if (!relatively_equal(*v, *vp, cfg.equality_tolerance)) {
    return Witness{m,
                   std::move(mapping),
                   {},
                   {{"value", *v}, {"value_permuted", *vp}},
                   "reordering the alternatives changes the index"};
  }
  return std::nullopt;
}

// ---- P3 -------------------------------------------------------------------

std::optional<Witness> p3_compare(IndexId id, const Pcm& base, double b_from,
                                  double b_to, const SuiteConfig& cfg) {
  const auto from = try_evaluate(id, intensify(base, b_from));
  const auto to = try_evaluate(id, intensify(base, b_to));
  if (!from || !to) {
    Witness w = undefined_at(base, "an intensified matrix");
    w.parameters = {{"b_from", b_from}, {"b_to", b_to}};
    return w;
  }
  if (oriented_value(id, *to) < oriented_value(id, *from) -
                                    cfg.monotonicity_slack) {
    return Witness{base,
                   {},
                   {{"b_from", b_from}, {"b_to", b_to}},
                   {{"value_from", *from}, {"value_to", *to}},
                   "intensifying preferences lowers the inconsistency"};
  }
  return std::nullopt;
}

std::optional<Witness> p3_scan(IndexId id, const Pcm& base,
                               const SuiteConfig& cfg) {
  const auto& grid = cfg.b_grid;
  std::vector<std::optional<double>> values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    values[k] = try_evaluate(id, intensify(base, grid[k]));
  }
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const auto& a = values[k];
    const auto& b = values[k + 1];
    if (!a || !b || oriented_value(id, *b) < oriented_value(id, *a) -
                                                 cfg.monotonicity_slack) {
      return p3_compare(id, base, grid[k], grid[k + 1], cfg);
    }
  }
  return std::nullopt;
}

// ---- P4 -------------------------------------------------------------------

std::optional<Witness> p4_compare(IndexId id, const Pcm& base, std::size_t p,
                                  std::size_t q, double d_from, double d_to,
                                  const SuiteConfig& cfg) {
  const auto from = try_evaluate(id, perturb_entry(base, p, q, d_from));
  const auto to = try_evaluate(id, perturb_entry(base, p, q, d_to));
  std::map<std::string, double> params{{"p", static_cast<double>(p)},
                                       {"q", static_cast<double>(q)},
                                       {"delta_from", d_from},
                                       {"delta_to", d_to}};
  if (!from || !to) {
    Witness w = undefined_at(base, "a perturbed matrix");
    w.parameters = std::move(params);
    return w;
  }
  const double a = oriented_value(id, *from);
  const double b = oriented_value(id, *to);
  // Moving away from delta = 1 on either side must not lower inconsistency.
  const bool away = d_from > 1.0 ? d_to > d_from : d_to < d_from;
  const double farther = away ? b : a;
  const double nearer = away ? a : b;
  if (farther < nearer - cfg.monotonicity_slack) {
    return Witness{base,
                   {},
                   std::move(params),
                   {{"value_from", *from}, {"value_to", *to}},
                   "pushing an entry further from its consistent value "
                   "lowers the inconsistency"};
  }
  return std::nullopt;
}

std::optional<Witness> p4_scan(IndexId id, const Pcm& base, std::size_t p,
                               std::size_t q, const SuiteConfig& cfg) {
  const auto& grid = cfg.delta_grid;
  std::vector<std::optional<double>> values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    values[k] = try_evaluate(id, perturb_entry(base, p, q, grid[k]));
  }
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    const bool below = grid[k + 1] < 1.0;
    const bool above = grid[k] > 1.0;
    if (!below && !above) continue;  // the pair straddles delta = 1
    const auto& a = values[k];
    const auto& b = values[k + 1];
    bool bad = !a || !b;
    if (!bad) {
      const double oa = oriented_value(id, *a);
      const double ob = oriented_value(id, *b);
      bad = below ? ob > oa + cfg.monotonicity_slack
                  : ob < oa - cfg.monotonicity_slack;
    }
    if (bad) return p4_compare(id, base, p, q, grid[k], grid[k + 1], cfg);
  }
  return std::nullopt;
}

// ---- P5 -------------------------------------------------------------------

Pcm nudge(const Pcm& m, std::size_t p, std::size_t q, double eps) {
  std::vector<double> a(m.entries().begin(), m.entries().end());
  const std::size_t n = m.order();
  a[p * n + q] *= 1.0 + eps;
  a[q * n + p] /= 1.0 + eps;
  return Pcm::from_entries(n, std::move(a));
}

std::optional<Witness> p5_sample(IndexId id, const Pcm& base, std::size_t p,
                                 std::size_t q, const SuiteConfig& cfg) {
  std::map<std::string, double> params{{"p", static_cast<double>(p)},
                                       {"q", static_cast<double>(q)}};
  const auto v0 = try_evaluate(id, base);
  std::map<std::string, double> observed;
  std::vector<std::optional<double>> diffs;
  for (double eps : kContinuityEpsilons) {
    const auto v = try_evaluate(id, nudge(base, p, q, eps));
    if (v) observed["value_" + eps_key(eps)] = *v;
    if (v && v0) {
      diffs.push_back(std::abs(*v - *v0));
      observed["diff_" + eps_key(eps)] = diffs.back().value();
    } else {
      diffs.push_back(std::nullopt);
    }
  }
  if (!v0) {
    return Witness{base, {}, std::move(params), std::move(observed),
                   "index undefined at the base matrix while defined "
                   "arbitrarily close to it"};
  }
  const double scale = std::max(1.0, std::abs(*v0));
  bool ok = std::all_of(diffs.begin(), diffs.end(),
                        [](const auto& d) { return d.has_value(); });
  // Only the two finest steps are compared: a coarse step may cross a
  // genuine kink or jump some distance away from the base.
  const std::size_t last = diffs.size() - 1;
  ok = ok && *diffs[last] <= *diffs[last - 1] + cfg.monotonicity_slack * scale;
  ok = ok && *diffs[last] <= kContinuityThreshold * scale;
  if (!ok) {
    observed["value"] = *v0;
    return Witness{base, {}, std::move(params), std::move(observed),
                   "index changes do not vanish with the entry change"};
  }
  return std::nullopt;
}

// ---- P6 -------------------------------------------------------------------

std::optional<Witness> p6_sample(IndexId id, const Pcm& m,
                                 const SuiteConfig& cfg) {
  const auto v = try_evaluate(id, m);
  const auto vt = try_evaluate(id, transpose(m));
  if (!v || !vt) {
    if (v.has_value() == vt.has_value()) return std::nullopt;
    return undefined_at(m, "only one of the matrix and its transpose");
  }
  if (!relatively_equal(*v, *vt, cfg.equality_tolerance)) {
    return Witness{m,
                   {},
                   {},
                   {{"value", *v}, {"value_transposed", *vt}},
                   "inverting all preferences changes the index"};
  }
  return std::nullopt;
}

Pcm all_ones(std::size_t n) {
  return Pcm::from_entries(n, std::vector<double>(n * n, 1.0));
}

}  // namespace

std::string_view to_string(Property p) {
  static constexpr std::array<std::string_view, 6> kNames{"P1", "P2", "P3",
                                                          "P4", "P5", "P6"};
  return kNames[static_cast<std::size_t>(p)];
}

std::optional<Property> parse_property(std::string_view text) {
  for (Property p : kAllProperties) {
    const auto name = to_string(p);
    if (text.size() == 2 && std::toupper(static_cast<unsigned char>(text[0])) ==
                                name[0] &&
        text[1] == name[1]) {
      return p;
    }
  }
  return std::nullopt;
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kNoViolationFound: return "ok";
    case VerdictStatus::kViolationFound: return "violated";
    case VerdictStatus::kHeuristic: return "heuristic";
    case VerdictStatus::kNotApplicable: return "n/a";
  }
  return "n/a";
}

std::optional<VerdictStatus> parse_verdict_status(std::string_view text) {
  for (auto s : {VerdictStatus::kNoViolationFound,
                 VerdictStatus::kViolationFound, VerdictStatus::kHeuristic,
                 VerdictStatus::kNotApplicable}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

std::vector<double> default_b_grid() {
  std::vector<double> g(41);
  for (std::size_t k = 0; k < g.size(); ++k) {
    g[k] = 1.0 + 4.0 * static_cast<double>(k) / 40.0;
  }
  return g;
}

std::vector<double> default_delta_grid() {
  std::vector<double> g;
  for (int k = 1; k <= 30; ++k) {
    if (k != 10) g.push_back(k / 10.0);
  }
  return g;
}

void SuiteConfig::validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidConfig, what);
  };
  if (trials_per_check == 0) fail("trials per check must be positive");
  if (orders.empty()) fail("at least one order is required");
  for (std::size_t n : orders) {
    if (n < kMinOrder) fail("order " + std::to_string(n) + " is below 3");
  }
  auto check_grid = [&](const std::vector<double>& g, std::string_view name) {
    if (g.empty()) fail(std::string(name) + " grid is empty");
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!std::isfinite(g[k]) || !(g[k] > 0.0)) {
        fail(std::string(name) + " grid values must be positive");
      }
      if (k > 0 && !(g[k] > g[k - 1])) {
        fail(std::string(name) + " grid must be strictly increasing");
      }
    }
  };
  check_grid(b_grid, "b");
  check_grid(delta_grid, "delta");
  if (b_grid.front() < 1.0) fail("b grid values must be at least 1");
  for (double d : delta_grid) {
    if (d > kDeltaExclusionLow && d < kDeltaExclusionHigh) {
      fail("delta grid must stay outside (0.95, 1.05)");
    }
  }
  for (double t : {nu_tolerance, equality_tolerance, monotonicity_slack}) {
    if (!std::isfinite(t) || !(t > 0.0)) fail("tolerances must be positive");
  }
}

const PropertyVerdict& AxiomReport::at(IndexId id, Property p) const {
  for (const auto& row : rows) {
    if (row.id == id) return row.by_property[static_cast<std::size_t>(p)];
  }
  throw Error(ErrorCode::kInvalidArgument,
              std::string(to_string(id)) + " is not part of the report");
}

PropertyVerdict check_p1(IndexId id, const SuiteConfig& cfg) {
  cfg.validate();
  std::size_t trials = 0;
  for (const auto& ex : reference::inconsistent_examples()) {
    ++trials;
    if (auto w = p1_inconsistent_sample(id, ex.matrix, cfg, {})) {
      return violated(std::move(*w), trials);
    }
  }
  for (std::size_t n : cfg.orders) {
    SplitMix64 rng(cell_seed(cfg, id, Property::kP1, n));
    for (std::size_t t = 0; t < cfg.trials_per_check; ++t) {
      ++trials;
      if (auto w = p1_consistent_sample(id, random_consistent(n, rng), cfg)) {
        return violated(std::move(*w), trials);
      }
      auto [base, p, q] = consistent_with_pair(n, rng, kP1MinLogMagnitude);
      const double delta = cfg.delta_grid[rng.below(cfg.delta_grid.size())];
      ++trials;
      if (auto w = p1_inconsistent_sample(
              id, perturb_entry(base, p, q, delta), cfg,
              {{"p", static_cast<double>(p)},
               {"q", static_cast<double>(q)},
               {"delta", delta}})) {
        return violated(std::move(*w), trials);
      }
    }
  }
  return clean(trials);
}

PropertyVerdict check_p2(IndexId id, const SuiteConfig& cfg) {
  cfg.validate();
  std::size_t trials = 0;
  for (const auto& ex : reference::inconsistent_examples()) {
    for (const auto& perm : all_permutations(ex.matrix.order())) {
      ++trials;
      if (auto w = p2_sample(id, ex.matrix, perm, cfg)) {
        return violated(std::move(*w), trials);
      }
    }
  }
  for (std::size_t n : cfg.orders) {
    SplitMix64 rng(cell_seed(cfg, id, Property::kP2, n));
    const auto perms = permutations_for(n, cfg.trials_per_check, rng);
    for (std::size_t t = 0; t < cfg.trials_per_check; ++t) {
      ++trials;
      if (auto w = p2_sample(id, random_pcm(n, rng), perms[t % perms.size()],
                             cfg)) {
        return violated(std::move(*w), trials);
      }
    }
  }
  return clean(trials);
}

PropertyVerdict check_p3(IndexId id, const SuiteConfig& cfg) {
  cfg.validate();
  std::size_t trials = 0;
  // Published counterexamples go first so their witnesses are the ones
  // reported.
  if (id == IndexId::kAI) {
    ++trials;
    if (auto w = p3_compare(id, reference::ai_intensification_counterexample(),
                            2.0, 3.0, cfg)) {
      return violated(std::move(*w), trials);
    }
  }
  if (id == IndexId::kCCI) {
    ++trials;
    if (auto w = p3_scan(id, reference::cci_intensification_counterexample(),
                         cfg)) {
      return violated(std::move(*w), trials);
    }
  }
  for (const auto& ex : reference::inconsistent_examples()) {
    ++trials;
    if (auto w = p3_scan(id, ex.matrix, cfg)) {
      return violated(std::move(*w), trials);
    }
  }
  for (std::size_t n : cfg.orders) {
    SplitMix64 rng(cell_seed(cfg, id, Property::kP3, n));
    for (std::size_t t = 0; t < cfg.trials_per_check; ++t) {
      ++trials;
      if (auto w = p3_scan(id, random_pcm(n, rng), cfg)) {
        return violated(std::move(*w), trials);
      }
    }
  }
  return clean(trials);
}

PropertyVerdict check_p4(IndexId id, const SuiteConfig& cfg) {
  cfg.validate();
  std::size_t trials = 0;
  const std::array<double, 3> weights{4.0, 2.0, 1.0};
  const Pcm seeded = consistent_from_weights(weights);
  for (std::size_t p = 0; p < seeded.order(); ++p) {
    for (std::size_t q = 0; q < seeded.order(); ++q) {
      if (p == q) continue;
      ++trials;
      if (auto w = p4_scan(id, seeded, p, q, cfg)) {
        return violated(std::move(*w), trials);
      }
    }
  }
  for (std::size_t n : cfg.orders) {
    SplitMix64 rng(cell_seed(cfg, id, Property::kP4, n));
    for (std::size_t t = 0; t < cfg.trials_per_check; ++t) {
      ++trials;
      auto [base, p, q] = consistent_with_pair(n, rng, 0.0);
      if (auto w = p4_scan(id, base, p, q, cfg)) {
        return violated(std::move(*w), trials);
      }
    }
  }
  return clean(trials);
}

PropertyVerdict check_p5(IndexId id, const SuiteConfig& cfg) {
  cfg.validate();
  std::size_t trials = 0;
  const std::array<Pcm, 3> seeded{all_ones(3), reference::inversion_example(),
                                  reference::ai_intensification_counterexample()};
  for (const Pcm& base : seeded) {
    ++trials;
    if (auto w = p5_sample(id, base, 0, 2, cfg)) {
      return violated(std::move(*w), trials);
    }
  }
  for (std::size_t n : cfg.orders) {
    SplitMix64 rng(cell_seed(cfg, id, Property::kP5, n));
    for (std::size_t t = 0; t < cfg.trials_per_check; ++t) {
      ++trials;
      Pcm base = random_pcm(n, rng);
      const std::size_t p = rng.below(n);
      std::size_t q = rng.below(n - 1);
      if (q >= p) ++q;
      if (auto w = p5_sample(id, base, p, q, cfg)) {
        return violated(std::move(*w), trials);
      }
    }
  }
  return {VerdictStatus::kHeuristic, std::nullopt, trials};
}

PropertyVerdict check_p6(IndexId id, const SuiteConfig& cfg) {
  cfg.validate();
  std::size_t trials = 0;
  for (const auto& ex : reference::inconsistent_examples()) {
    ++trials;
    if (auto w = p6_sample(id, ex.matrix, cfg)) {
      return violated(std::move(*w), trials);
    }
  }
  for (std::size_t n : cfg.orders) {
    SplitMix64 rng(cell_seed(cfg, id, Property::kP6, n));
    for (std::size_t t = 0; t < cfg.trials_per_check; ++t) {
      ++trials;
      if (auto w = p6_sample(id, random_pcm(n, rng), cfg)) {
        return violated(std::move(*w), trials);
      }
    }
  }
  return clean(trials);
}

PropertyVerdict check_property(IndexId id, Property p,
                               const SuiteConfig& cfg) {
  switch (p) {
    case Property::kP1: return check_p1(id, cfg);
    case Property::kP2: return check_p2(id, cfg);
    case Property::kP3: return check_p3(id, cfg);
    case Property::kP4: return check_p4(id, cfg);
    case Property::kP5: return check_p5(id, cfg);
    case Property::kP6: return check_p6(id, cfg);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown property");
}

bool recheck_witness(IndexId id, Property p, const Witness& w,
                     const SuiteConfig& cfg) {
  auto param = [&](const char* key) { return w.parameters.at(key); };
  auto index_param = [&](const char* key) {
    return static_cast<std::size_t>(param(key));
  };
  switch (p) {
    case Property::kP1:
      return param("consistent") != 0.0
                 ? p1_consistent_sample(id, w.matrix, cfg).has_value()
                 : p1_inconsistent_sample(id, w.matrix, cfg, {}).has_value();
    case Property::kP2:
      return p2_sample(id, w.matrix, Permutation(w.permutation), cfg)
          .has_value();
    case Property::kP3:
      return p3_compare(id, w.matrix, param("b_from"), param("b_to"), cfg)
          .has_value();
    case Property::kP4:
      return p4_compare(id, w.matrix, index_param("p"), index_param("q"),
                        param("delta_from"), param("delta_to"), cfg)
          .has_value();
    case Property::kP5:
      return p5_sample(id, w.matrix, index_param("p"), index_param("q"), cfg)
          .has_value();
    case Property::kP6:
      return p6_sample(id, w.matrix, cfg).has_value();
  }
  return false;
}

AxiomReport run_suite(std::span<const IndexId> ids, const SuiteConfig& cfg,
                      unsigned threads) {
  if (ids.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no indices selected");
  }
  cfg.validate();
  AxiomReport report{cfg, {}};
  for (IndexId id : ids) report.rows.push_back({id, {}});

  const std::size_t cells = ids.size() * kAllProperties.size();
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(cells);
  auto work = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < cells;) {
      const std::size_t row = c / kAllProperties.size();
      const std::size_t col = c % kAllProperties.size();
      try {
        report.rows[row].by_property[col] =
            check_property(ids[row], kAllProperties[col], cfg);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

namespace {

void require_grid(std::span<const double> grid) {
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "empty grid");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!std::isfinite(grid[k]) || !(grid[k] > 0.0) ||
        (k > 0 && !(grid[k] > grid[k - 1]))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "grid must be positive and strictly increasing");
    }
  }
}

}  // namespace

CurveSeries curve_intensification(IndexId id, const Pcm& m,
                                  std::span<const double> grid) {
  require_grid(grid);
  CurveSeries s{id, m, "b", std::nullopt, {}};
  for (double b : grid) s.samples.push_back({b, evaluate(id, intensify(m, b))});
  return s;
}

CurveSeries curve_perturbation(IndexId id, const Pcm& m, std::size_t p,
                               std::size_t q, std::span<const double> grid) {
  require_grid(grid);
  if (!is_consistent(m, 1e-9)) {
    throw Error(ErrorCode::kInconsistentBase,
                "perturbation curves need a consistent base matrix");
  }
  CurveSeries s{id, m, "delta", std::pair{p, q}, {}};
  for (double d : grid) {
    s.samples.push_back({d, evaluate(id, perturb_entry(m, p, q, d))});
  }
  return s;
}

}  // namespace pcmi
