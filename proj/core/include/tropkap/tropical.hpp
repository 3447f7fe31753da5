#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "tropkap/rational.hpp"

namespace tropkap {

/// Largest square size the permutation-enumeration routines accept by
/// default (8! = 40320 permutations).
inline constexpr std::size_t kDefaultEnumerationThreshold = 8;

/// Min-plus addition.
Rational trop_add(const Rational& a, const Rational& b);
/// Min-plus multiplication.
Rational trop_mul(const Rational& a, const Rational& b);

/// Row/column index sets picking out a submatrix. Indices are zero-based
/// internally; `to_string` prints them one-based.
struct SubmatrixSelector {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  bool is_square() const { return rows.size() == cols.size(); }
  /// Throws DimensionError unless both lists are nonempty, strictly
  /// increasing and inside a `row_limit` x `col_limit` matrix.
  void validate(std::size_t row_limit, std::size_t col_limit) const;
  std::string to_string() const;

  friend bool operator==(const SubmatrixSelector&,
                         const SubmatrixSelector&) = default;
  friend auto operator<=>(const SubmatrixSelector&,
                          const SubmatrixSelector&) = default;
};

/// Dense row-major matrix over the min-plus semiring with exact entries.
class TropicalMatrix {
 public:
  TropicalMatrix(std::size_t rows, std::size_t cols,
                 std::vector<Rational> entries);
  TropicalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const std::vector<Rational>& entries() const { return entries_; }

  TropicalMatrix submatrix(const SubmatrixSelector& sel) const;
  TropicalMatrix transposed() const;

  friend bool operator==(const TropicalMatrix&,
                         const TropicalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// A permutation of {0..n-1} in one-line form: `image[i]` is sigma(i).
struct Permutation {
  std::vector<std::size_t> image;

  std::size_t size() const { return image.size(); }
  /// One-based one-line notation, e.g. {1,3,2,4}.
  std::vector<std::size_t> one_line() const;
  /// "[1,3,2,4]".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// Tropical permanent together with every permutation attaining it.
struct PermanentCertificate {
  Rational value;
  std::size_t optimal_count = 0;
  std::vector<Permutation> witnesses;  // lexicographically sorted
};

/// Exhaustive evaluation of min over sigma of sum_i s(i, sigma(i)).
/// Throws DimensionError for non-square input or n > threshold.
PermanentCertificate permanent(
    const TropicalMatrix& s,
    std::size_t threshold = kDefaultEnumerationThreshold);

/// Same value as `permanent(s).value`, computed as a min-cost assignment
/// in O(n^3). No size limit and no multiplicity information.
Rational permanent_value_fast(const TropicalMatrix& s);

/// One optimal assignment found by the Hungarian method.
Permutation optimal_assignment(const TropicalMatrix& s);

/// True iff the permanent minimum is attained by at least two permutations.
bool is_tropically_singular(
    const TropicalMatrix& s,
    std::size_t threshold = kDefaultEnumerationThreshold);

/// Singularity decided without enumeration: take one optimal assignment,
/// forbid each of its edges in turn, and test whether the optimum survives.
bool is_tropically_singular_by_assignment(const TropicalMatrix& s);

/// Calls `visit(selector, submatrix)` for every k x k submatrix in
/// lexicographic (rows, cols) order; stops early when `visit` returns false.
void for_each_square_submatrix(
    const TropicalMatrix& m, std::size_t k,
    const std::function<bool(const SubmatrixSelector&,
                             const TropicalMatrix&)>& visit);

std::vector<std::pair<SubmatrixSelector, TropicalMatrix>>
all_square_submatrices(const TropicalMatrix& m, std::size_t k);

struct TropicalRank {
  std::size_t rank = 0;
  SubmatrixSelector witness;  // lexicographically first nonsingular one
};

/// Largest r with a tropically nonsingular r x r submatrix.
TropicalRank tropical_rank(
    const TropicalMatrix& m,
    std::size_t threshold = kDefaultEnumerationThreshold);

}  // namespace tropkap
