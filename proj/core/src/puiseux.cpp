#include "tropkap/puiseux.hpp"

#include <algorithm>
#include <numeric>

#include "tropkap/combinatorics.hpp"
#include "tropkap/error.hpp"

namespace tropkap {

namespace {

// Sorts by exponent, merges equal exponents and drops zero coefficients.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.exponent < b.exponent;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& term : terms) {
    if (!out.empty() && out.back().exponent == term.exponent) {
      out.back().coefficient += term.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  return out;
}

void require_square(const PuiseuxMatrix& m, std::size_t threshold) {
  if (!m.is_square()) {
    throw DimensionError("determinant requires a square matrix");
  }
  if (m.rows() > threshold) {
    throw DimensionError("matrix size " + std::to_string(m.rows()) +
                         " exceeds enumeration threshold " +
                         std::to_string(threshold));
  }
}

// Depth-first walk over permutations sharing prefix products. Leaf terms
// are collected unmerged and canonicalized once at the end.
void expand(const PuiseuxMatrix& m, std::size_t row,
            std::vector<bool>& used, int sign, const PuiseuxSeries& prefix,
            std::vector<Term>& sink) {
  const std::size_t n = m.rows();
  if (row == n) {
    for (const Term& term : prefix.terms()) {
      sink.push_back(sign > 0 ? term
                              : Term{-term.coefficient, term.exponent});
    }
    return;
  }
  std::size_t larger_used = 0;  // used columns greater than the current one
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c]) ++larger_used;
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c]) {
      --larger_used;
      continue;
    }
    const PuiseuxSeries& entry = m(row, c);
    if (entry.is_zero()) continue;
    used[c] = true;
    const int next_sign = (larger_used % 2 == 0) ? sign : -sign;
    expand(m, row + 1, used, next_sign, prefix * entry, sink);
    used[c] = false;
  }
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(const Rational& constant) {
  if (!constant.is_zero()) terms_.push_back(Term{constant, Rational(0)});
}

PuiseuxSeries::PuiseuxSeries(std::vector<Term> terms)
    : terms_(canonicalize(std::move(terms))) {}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& coefficient,
                                      const Rational& exponent) {
  return PuiseuxSeries(std::vector<Term>{Term{coefficient, exponent}});
}

PuiseuxSeries t_power(const Rational& exponent) {
  return PuiseuxSeries::monomial(1, exponent);
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries out = *this;
  for (Term& term : out.terms_) term.coefficient = -term.coefficient;
  return out;
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() ||
        (a != terms_.end() && a->exponent < b->exponent)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exponent < a->exponent) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (!c.is_zero()) merged.push_back(Term{std::move(c), a->exponent});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

PuiseuxSeries& PuiseuxSeries::operator-=(const PuiseuxSeries& other) {
  return *this += -other;
}

PuiseuxSeries& PuiseuxSeries::operator*=(const PuiseuxSeries& other) {
  *this = *this * other;
  return *this;
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.is_zero() || b.is_zero()) return PuiseuxSeries();
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& x : a.terms_) {
    for (const Term& y : b.terms_) {
      products.push_back(
          Term{x.coefficient * y.coefficient, x.exponent + y.exponent});
    }
  }
  return PuiseuxSeries(std::move(products));
}

const Rational& Valuation::value() const {
  if (!value_) throw Error("valuation of the zero series is infinite");
  return *value_;
}

std::string Valuation::to_string() const {
  return value_ ? value_->to_string() : "inf";
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(*a.value_ + *b.value_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  return *a.value_ <=> *b.value_;
}

Valuation min(const Valuation& a, const Valuation& b) {
  return b < a ? b : a;
}

PuiseuxSeries ps_add(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a + b;
}

PuiseuxSeries ps_mul(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a * b;
}

Valuation deg(const PuiseuxSeries& a) {
  if (a.is_zero()) return Valuation::infinity();
  return Valuation(a.terms().front().exponent);
}

PuiseuxMatrix::PuiseuxMatrix(std::size_t rows, std::size_t cols,
                             std::vector<PuiseuxSeries> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("series matrix must have at least one row and column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("entry count does not match rows x cols");
  }
}

PuiseuxMatrix::PuiseuxMatrix(
    std::initializer_list<std::initializer_list<PuiseuxSeries>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("series matrix must have at least one row and column");
  }
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged series matrix");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

PuiseuxMatrix PuiseuxMatrix::identity(std::size_t n) {
  PuiseuxMatrix m = zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = PuiseuxSeries(1);
  return m;
}

PuiseuxMatrix PuiseuxMatrix::zero(std::size_t rows, std::size_t cols) {
  return PuiseuxMatrix(rows, cols, std::vector<PuiseuxSeries>(rows * cols));
}

PuiseuxMatrix PuiseuxMatrix::submatrix(const SubmatrixSelector& sel) const {
  sel.validate(rows_, cols_);
  std::vector<PuiseuxSeries> out;
  out.reserve(sel.rows.size() * sel.cols.size());
  for (std::size_t i : sel.rows) {
    for (std::size_t j : sel.cols) out.push_back((*this)(i, j));
  }
  return PuiseuxMatrix(sel.rows.size(), sel.cols.size(), std::move(out));
}

PuiseuxMatrix PuiseuxMatrix::minor_matrix(std::size_t row,
                                          std::size_t col) const {
  if (row >= rows_ || col >= cols_ || rows_ < 2 || cols_ < 2) {
    throw DimensionError("minor index out of range");
  }
  SubmatrixSelector sel;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i != row) sel.rows.push_back(i);
  }
  for (std::size_t j = 0; j < cols_; ++j) {
    if (j != col) sel.cols.push_back(j);
  }
  return submatrix(sel);
}

PuiseuxMatrix PuiseuxMatrix::transposed() const {
  std::vector<PuiseuxSeries> out;
  out.reserve(entries_.size());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  }
  return PuiseuxMatrix(cols_, rows_, std::move(out));
}

PuiseuxSeries determinant(const PuiseuxMatrix& m, std::size_t threshold) {
  require_square(m, threshold);
  std::vector<bool> used(m.rows(), false);
  std::vector<Term> sink;
  expand(m, 0, used, 1, PuiseuxSeries(1), sink);
  return PuiseuxSeries(std::move(sink));
}

PuiseuxSeries determinant_by_cofactors(const PuiseuxMatrix& m) {
  if (!m.is_square()) {
    throw DimensionError("determinant requires a square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  PuiseuxSeries total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    PuiseuxSeries cofactor = m(0, j) * determinant_by_cofactors(m.minor_matrix(0, j));
    if (j % 2 == 0) {
      total += cofactor;
    } else {
      total -= cofactor;
    }
  }
  return total;
}

std::optional<SubmatrixSelector> find_nonzero_minor(const PuiseuxMatrix& m,
                                                    std::size_t r,
                                                    std::size_t threshold) {
  if (r < 1 || r > std::min(m.rows(), m.cols())) {
    throw DimensionError("minor size " + std::to_string(r) + " out of range");
  }
  if (r > threshold) {
    throw DimensionError("minor size " + std::to_string(r) +
                         " exceeds enumeration threshold " +
                         std::to_string(threshold));
  }
  const auto row_sets = combinations(m.rows(), r);
  const auto col_sets = combinations(m.cols(), r);
  for (const auto& rows : row_sets) {
    for (const auto& cols : col_sets) {
      SubmatrixSelector sel{rows, cols};
      if (!determinant(m.submatrix(sel), threshold).is_zero()) return sel;
    }
  }
  return std::nullopt;
}

std::size_t series_rank(const PuiseuxMatrix& m, std::size_t threshold) {
  const std::size_t top = std::min(m.rows(), m.cols());
  if (top > threshold) {
    throw DimensionError("matrix size " + std::to_string(top) +
                         " exceeds enumeration threshold " +
                         std::to_string(threshold));
  }
  for (std::size_t r = top; r >= 1; --r) {
    if (find_nonzero_minor(m, r, threshold)) return r;
  }
  return 0;
}

std::vector<PuiseuxSeries> row_sum(const PuiseuxMatrix& m) {
  std::vector<PuiseuxSeries> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += m(i, j);
  }
  return out;
}

}  // namespace tropkap
