#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "tropkap/rational.hpp"
#include "tropkap/tropical.hpp"

namespace tropkap {

/// One term c * t^e of a series.
struct Term {
  Rational coefficient;
  Rational exponent;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite generalized power series sum_i c_i t^{e_i} with rational
/// coefficients and rational exponents.
///
/// Stored canonically: coefficients nonzero, exponents strictly increasing.
/// The empty term list is the zero series, so two series are equal exactly
/// when their term lists are.
class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;
  PuiseuxSeries(const Rational& constant);  // NOLINT(google-explicit-constructor)
  PuiseuxSeries(std::int64_t constant)      // NOLINT(google-explicit-constructor)
      : PuiseuxSeries(Rational(constant)) {}
  /// Accepts terms in any order; merges equal exponents and drops zeros.
  explicit PuiseuxSeries(std::vector<Term> terms);

  static PuiseuxSeries monomial(const Rational& coefficient,
                                const Rational& exponent);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PuiseuxSeries operator-() const;
  PuiseuxSeries& operator+=(const PuiseuxSeries& other);
  PuiseuxSeries& operator-=(const PuiseuxSeries& other);
  PuiseuxSeries& operator*=(const PuiseuxSeries& other);

  friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) {
    return a += b;
  }
  friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) {
    return a -= b;
  }
  friend PuiseuxSeries operator*(const PuiseuxSeries& a,
                                 const PuiseuxSeries& b);

  friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

 private:
  std::vector<Term> terms_;
};

/// The series variable t.
PuiseuxSeries t_power(const Rational& exponent);

/// Valuation of a series: its least exponent, or infinity for zero.
class Valuation {
 public:
  Valuation() = default;  // infinity
  Valuation(const Rational& value) : value_(value) {}  // NOLINT
  Valuation(std::int64_t value) : value_(Rational(value)) {}  // NOLINT
  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Throws Error when infinite.
  const Rational& value() const;
  /// Decimal rational, or "inf".
  std::string to_string() const;

  /// Infinity absorbs.
  friend Valuation operator+(const Valuation& a, const Valuation& b);

  friend bool operator==(const Valuation&, const Valuation&) = default;
  /// Infinity compares above every finite value.
  friend std::strong_ordering operator<=>(const Valuation& a,
                                          const Valuation& b);

 private:
  std::optional<Rational> value_;
};

Valuation min(const Valuation& a, const Valuation& b);

PuiseuxSeries ps_add(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries ps_mul(const PuiseuxSeries& a, const PuiseuxSeries& b);
/// Least exponent; infinity for the zero series.
Valuation deg(const PuiseuxSeries& a);

/// Dense row-major matrix of series.
class PuiseuxMatrix {
 public:
  PuiseuxMatrix(std::size_t rows, std::size_t cols,
                std::vector<PuiseuxSeries> entries);
  PuiseuxMatrix(std::initializer_list<std::initializer_list<PuiseuxSeries>> rows);

  static PuiseuxMatrix identity(std::size_t n);
  static PuiseuxMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const PuiseuxSeries& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  PuiseuxSeries& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const std::vector<PuiseuxSeries>& entries() const { return entries_; }

  PuiseuxMatrix submatrix(const SubmatrixSelector& sel) const;
  /// Drops one row and one column (zero-based).
  PuiseuxMatrix minor_matrix(std::size_t row, std::size_t col) const;
  PuiseuxMatrix transposed() const;

  friend bool operator==(const PuiseuxMatrix&, const PuiseuxMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<PuiseuxSeries> entries_;
};

/// Signed permutation expansion sum_sigma sign(sigma) prod_i m(i, sigma(i)).
/// Throws DimensionError for non-square input or n > threshold.
PuiseuxSeries determinant(const PuiseuxMatrix& m,
                          std::size_t threshold = kDefaultEnumerationThreshold);

/// Recursive Laplace expansion along the first row. Independent of
/// `determinant`; used to cross-check it.
PuiseuxSeries determinant_by_cofactors(const PuiseuxMatrix& m);

/// Rank over the series field: the largest r with a nonzero r x r minor,
/// found by descending search. 0 for the zero matrix.
std::size_t series_rank(const PuiseuxMatrix& m,
                        std::size_t threshold = kDefaultEnumerationThreshold);

/// Lexicographically first selector of a nonzero r x r minor, if any.
std::optional<SubmatrixSelector> find_nonzero_minor(
    const PuiseuxMatrix& m, std::size_t r,
    std::size_t threshold = kDefaultEnumerationThreshold);

/// Sum of all rows, one entry per column.
std::vector<PuiseuxSeries> row_sum(const PuiseuxMatrix& m);

}  // namespace tropkap
