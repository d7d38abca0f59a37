#pragma once

// Pairwise comparison matrices and the preference transformations used by
// the inconsistency properties (reordering, inversion, intensification and
// single-entry perturbation).

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pcmi {

/// Relative tolerance for the unit diagonal and a_ij * a_ji = 1.
inline constexpr double kReciprocityTolerance = 1e-12;

/// Smallest order accepted for a comparison matrix.
inline constexpr std::size_t kMinOrder = 3;

/// A validated positive reciprocal matrix of order n >= 3.
///
/// Entries are stored row-major and never change after construction, so a
/// Pcm can be shared freely between threads.
class Pcm {
 public:
  /// Validates `rows` and builds the matrix. Throws pcmi::Error with
  /// kNonSquare, kOrderTooSmall, kNonFiniteEntry, kNonPositiveEntry or
  /// kReciprocityViolation (worst offending pair reported).
  static Pcm from_rows(const std::vector<std::vector<double>>& rows);
  static Pcm from_rows(
      std::initializer_list<std::initializer_list<double>> rows);

  /// Same checks as from_rows, for a row-major buffer of n*n values.
  static Pcm from_entries(std::size_t order, std::vector<double> entries);

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * order_ + j];
  }
  std::span<const double> entries() const noexcept { return entries_; }
  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(entries_).subspan(i * order_, order_);
  }
  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const Pcm&, const Pcm&) = default;

 private:
  Pcm(std::size_t order, std::vector<double> entries);

  std::size_t order_;
  std::vector<double> entries_;
};

/// A bijection on {0, ..., n-1}.
class Permutation {
 public:
  /// Throws kInvalidPermutation unless `mapping` is a bijection.
  explicit Permutation(std::vector<std::size_t> mapping);

  static Permutation identity(std::size_t n);
  /// Exchanges positions a and b, leaving everything else fixed.
  static Permutation transposition(std::size_t n, std::size_t a,
                                   std::size_t b);

  std::size_t size() const noexcept { return mapping_.size(); }
  std::size_t operator()(std::size_t i) const noexcept { return mapping_[i]; }
  std::span<const std::size_t> mapping() const noexcept { return mapping_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> mapping_;
};

/// True iff |a_ik / (a_ij a_jk) - 1| <= tol for every triple. Throws
/// kInvalidArgument for tol <= 0.
bool is_consistent(const Pcm& m, double tol);

/// a_ij = w_i / w_j.
Pcm consistent_from_weights(std::span<const double> weights);

/// Consistent matrix generated by its superdiagonal: b_ij is the product of
/// chain[i..j-1] above the diagonal and its reciprocal below.
Pcm consistent_from_chain(std::span<const double> chain);

/// Entry (i, j) of the result is a_{p(i) p(j)}, i.e. P A P^T.
Pcm permute(const Pcm& m, const Permutation& p);

Pcm transpose(const Pcm& m);

/// Entrywise power a_ij^b. P3 only concerns b >= 1; smaller positive
/// exponents are accepted for plotting (see is_intensification_exponent).
Pcm intensify(const Pcm& m, double b);

inline bool is_intensification_exponent(double b) { return b >= 1.0; }

/// Replaces a_pq by a_pq^delta and a_qp by a_qp^delta. Throws kDiagonalEntry
/// for p == q, kUnitEntry when a_pq == 1, kInvalidArgument for delta <= 0.
Pcm perturb_entry(const Pcm& m, std::size_t p, std::size_t q, double delta);

}  // namespace pcmi
