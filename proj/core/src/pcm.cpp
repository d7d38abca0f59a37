#include "pcmi/pcm.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "pcmi/error.hpp"

namespace pcmi {
namespace {

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void validate(std::size_t n, const std::vector<double>& a) {
  if (n < kMinOrder) {
    throw Error(ErrorCode::kOrderTooSmall,
                "order " + std::to_string(n) + " is below the minimum of 3");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = a[i * n + j];
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kNonFiniteEntry,
                    "entry " + pair_name(i, j) + " is not finite",
                    EntryLocation{i, j});
      }
      if (!(v > 0.0)) {
        throw Error(ErrorCode::kNonPositiveEntry,
                    "entry " + pair_name(i, j) + " is not positive",
                    EntryLocation{i, j});
      }
    }
  }
  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double dev = i == j ? std::abs(a[i * n + i] - 1.0)
                                : std::abs(a[i * n + j] * a[j * n + i] - 1.0);
      if (dev > worst) {
        worst = dev;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > kReciprocityTolerance) {
    const std::string what =
        wi == wj ? "diagonal entry " + pair_name(wi, wi) + " is not 1"
                 : "a" + pair_name(wi, wj) + " * a" + pair_name(wj, wi) +
                       " deviates from 1 by " + std::to_string(worst);
    throw Error(ErrorCode::kReciprocityViolation, what, EntryLocation{wi, wj});
  }
}

}  // namespace

Pcm::Pcm(std::size_t order, std::vector<double> entries)
    : order_(order), entries_(std::move(entries)) {
  validate(order_, entries_);
}

Pcm Pcm::from_entries(std::size_t order, std::vector<double> entries) {
  if (entries.size() != order * order) {
    throw Error(ErrorCode::kNonSquare,
                std::to_string(entries.size()) + " values cannot fill a " +
                    std::to_string(order) + "x" + std::to_string(order) +
                    " matrix");
  }
  return Pcm(order, std::move(entries));
}

Pcm Pcm::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::kNonSquare,
                  "row " + std::to_string(i + 1) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(n),
                  EntryLocation{i, 0});
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return Pcm(n, std::move(flat));
}

Pcm Pcm::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

std::vector<std::vector<double>> Pcm::to_rows() const {
  std::vector<std::vector<double>> out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    out[i].assign(entries_.begin() + i * order_,
                  entries_.begin() + (i + 1) * order_);
  }
  return out;
}

Permutation::Permutation(std::vector<std::size_t> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t v : mapping_) {
    if (v >= mapping_.size() || seen[v]) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "mapping is not a bijection on {1.." +
                      std::to_string(mapping_.size()) + "}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a,
                                       std::size_t b) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  if (a >= n || b >= n) {
    throw Error(ErrorCode::kInvalidPermutation, "transposition out of range");
  }
  std::swap(m[a], m[b]);
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = i;
  return Permutation(std::move(inv));
}

bool is_consistent(const Pcm& m, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(m(i, k) / (m(i, j) * m(j, k)) - 1.0) > tol) return false;
      }
    }
  }
  return true;
}

Pcm consistent_from_weights(std::span<const double> weights) {
  const std::size_t n = weights.size();
  if (n < kMinOrder) {
    throw Error(ErrorCode::kOrderTooSmall,
                "need at least 3 weights, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(weights[i] > 0.0) || !std::isfinite(weights[i])) {
      throw Error(ErrorCode::kNonPositiveEntry,
                  "weight " + std::to_string(i + 1) + " is not positive",
                  EntryLocation{i, i});
    }
  }
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = i == j ? 1.0 : weights[i] / weights[j];
    }
  }
  return Pcm::from_entries(n, std::move(a));
}

Pcm consistent_from_chain(std::span<const double> chain) {
  const std::size_t n = chain.size() + 1;
  if (n < kMinOrder) {
    throw Error(ErrorCode::kOrderTooSmall,
                "a chain of " + std::to_string(chain.size()) +
                    " links gives an order below 3");
  }
  for (std::size_t p = 0; p < chain.size(); ++p) {
    if (!(chain[p] > 0.0) || !std::isfinite(chain[p])) {
      throw Error(ErrorCode::kNonPositiveEntry,
                  "chain link " + std::to_string(p + 1) + " is not positive",
                  EntryLocation{p, p + 1});
    }
  }
  std::vector<double> a(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    double prod = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      prod *= chain[j - 1];
      a[i * n + j] = prod;
      a[j * n + i] = 1.0 / prod;
    }
  }
  return Pcm::from_entries(n, std::move(a));
}

Pcm permute(const Pcm& m, const Permutation& p) {
  const std::size_t n = m.order();
  if (p.size() != n) {
    throw Error(ErrorCode::kOrderMismatch,
                "permutation of size " + std::to_string(p.size()) +
                    " applied to a matrix of order " + std::to_string(n));
  }
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(p(i), p(j));
  }
  return Pcm::from_entries(n, std::move(a));
}

Pcm transpose(const Pcm& m) {
  const std::size_t n = m.order();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(j, i);
  }
  return Pcm::from_entries(n, std::move(a));
}

Pcm intensify(const Pcm& m, double b) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw Error(ErrorCode::kInvalidArgument,
                "intensification exponent must be positive");
  }
  const std::size_t n = m.order();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = i == j ? 1.0 : std::pow(m(i, j), b);
    }
  }
  return Pcm::from_entries(n, std::move(a));
}

Pcm perturb_entry(const Pcm& m, std::size_t p, std::size_t q, double delta) {
  const std::size_t n = m.order();
  if (p >= n || q >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "entry " + pair_name(p, q) + " is outside the matrix");
  }
  if (p == q) {
    throw Error(ErrorCode::kDiagonalEntry,
                "cannot perturb diagonal entry " + pair_name(p, q),
                EntryLocation{p, q});
  }
  if (m(p, q) == 1.0) {
    throw Error(ErrorCode::kUnitEntry,
                "entry " + pair_name(p, q) + " equals 1 and has no direction",
                EntryLocation{p, q});
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::kInvalidArgument,
                "perturbation exponent must be positive");
  }
  std::vector<double> a(m.entries().begin(), m.entries().end());
  a[p * n + q] = std::pow(m(p, q), delta);
  a[q * n + p] = std::pow(m(q, p), delta);
  return Pcm::from_entries(n, std::move(a));
}

}  // namespace pcmi
