#include "tropkap/tropical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tropkap/combinatorics.hpp"
#include "tropkap/error.hpp"

namespace tropkap {

Rational trop_add(const Rational& a, const Rational& b) {
  return std::min(a, b);
}

Rational trop_mul(const Rational& a, const Rational& b) { return a + b; }

namespace {

void check_indices(const std::vector<std::size_t>& idx, std::size_t limit,
                   const char* what) {
  if (idx.empty()) {
    throw DimensionError(std::string("empty ") + what + " selection");
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= limit) {
      throw DimensionError(std::string(what) + " index out of range");
    }
    if (i > 0 && idx[i] <= idx[i - 1]) {
      throw DimensionError(std::string(what) +
                           " indices must be strictly increasing");
    }
  }
}

std::string join_one_based(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) os << ',';
    os << idx[i] + 1;
  }
  return os.str();
}

void require_square(const TropicalMatrix& s, std::size_t threshold) {
  if (!s.is_square()) {
    throw DimensionError("permanent requires a square matrix");
  }
  if (s.rows() > threshold) {
    throw DimensionError("matrix size " + std::to_string(s.rows()) +
                         " exceeds enumeration threshold " +
                         std::to_string(threshold));
  }
}

}  // namespace

void SubmatrixSelector::validate(std::size_t row_limit,
                                 std::size_t col_limit) const {
  check_indices(rows, row_limit, "row");
  check_indices(cols, col_limit, "column");
}

std::string SubmatrixSelector::to_string() const {
  return "rows=" + join_one_based(rows) + " cols=" + join_one_based(cols);
}

TropicalMatrix::TropicalMatrix(std::size_t rows, std::size_t cols,
                               std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("tropical matrix must have at least one row and column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("entry count does not match rows x cols");
  }
}

TropicalMatrix::TropicalMatrix(
    std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("tropical matrix must have at least one row and column");
  }
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged tropical matrix");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

TropicalMatrix TropicalMatrix::submatrix(const SubmatrixSelector& sel) const {
  sel.validate(rows_, cols_);
  std::vector<Rational> out;
  out.reserve(sel.rows.size() * sel.cols.size());
  for (std::size_t i : sel.rows) {
    for (std::size_t j : sel.cols) out.push_back((*this)(i, j));
  }
  return TropicalMatrix(sel.rows.size(), sel.cols.size(), std::move(out));
}

TropicalMatrix TropicalMatrix::transposed() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  }
  return TropicalMatrix(cols_, rows_, std::move(out));
}

std::vector<std::size_t> Permutation::one_line() const {
  std::vector<std::size_t> out(image.size());
  std::transform(image.begin(), image.end(), out.begin(),
                 [](std::size_t v) { return v + 1; });
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i > 0) os << ',';
    os << image[i] + 1;
  }
  os << ']';
  return os.str();
}

PermanentCertificate permanent(const TropicalMatrix& s,
                               std::size_t threshold) {
  require_square(s, threshold);
  const std::size_t n = s.rows();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});

  PermanentCertificate cert;
  bool first = true;
  // next_permutation walks S_n in lexicographic order, so witnesses come
  // out sorted.
  do {
    Rational sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += s(i, sigma[i]);
    if (first || sum < cert.value) {
      cert.value = std::move(sum);
      cert.witnesses.clear();
      cert.witnesses.push_back(Permutation{sigma});
      first = false;
    } else if (sum == cert.value) {
      cert.witnesses.push_back(Permutation{sigma});
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  cert.optimal_count = cert.witnesses.size();
  return cert;
}

Permutation optimal_assignment(const TropicalMatrix& s) {
  if (!s.is_square()) {
    throw DimensionError("assignment requires a square matrix");
  }
  // Hungarian method with row/column potentials (1-based, column 0 is the
  // virtual start column).
  const std::size_t n = s.rows();
  std::vector<Rational> u(n + 1), v(n + 1), minv(n + 1);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<bool> used(n + 1, false);
    std::vector<bool> reached(n + 1, false);  // minv[j] holds a finite value
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      std::size_t j1 = 0;
      bool have_delta = false;
      Rational delta;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = s(i0 - 1, j - 1) - u[i0] - v[j];
        if (!reached[j] || cur < minv[j]) {
          minv[j] = std::move(cur);
          way[j] = j0;
          reached[j] = true;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          j1 = j;
          have_delta = true;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Permutation p{std::vector<std::size_t>(n)};
  for (std::size_t j = 1; j <= n; ++j) p.image[match[j] - 1] = j - 1;
  return p;
}

Rational permanent_value_fast(const TropicalMatrix& s) {
  const Permutation p = optimal_assignment(s);
  Rational sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += s(i, p.image[i]);
  return sum;
}

bool is_tropically_singular(const TropicalMatrix& s, std::size_t threshold) {
  return permanent(s, threshold).optimal_count >= 2;
}

bool is_tropically_singular_by_assignment(const TropicalMatrix& s) {
  const Permutation best = optimal_assignment(s);
  const std::size_t n = s.rows();
  Rational value = 0;
  for (std::size_t i = 0; i < n; ++i) value += s(i, best.image[i]);
  if (n == 1) return false;

  const auto [lo, hi] = std::minmax_element(s.entries().begin(),
                                            s.entries().end());
  // Any assignment through an entry this large costs more than every
  // assignment avoiding it.
  const Rational forbidden = Rational(static_cast<std::int64_t>(n)) * *hi -
                             Rational(static_cast<std::int64_t>(n - 1)) * *lo +
                             1;
  // A second optimum differs from `best` in at least one edge, so it
  // survives forbidding that edge.
  for (std::size_t i = 0; i < n; ++i) {
    TropicalMatrix blocked = s;
    blocked(i, best.image[i]) = forbidden;
    if (permanent_value_fast(blocked) == value) return true;
  }
  return false;
}

void for_each_square_submatrix(
    const TropicalMatrix& m, std::size_t k,
    const std::function<bool(const SubmatrixSelector&,
                             const TropicalMatrix&)>& visit) {
  if (k < 1 || k > std::min(m.rows(), m.cols())) {
    throw DimensionError("submatrix size " + std::to_string(k) +
                         " out of range");
  }
  const auto row_sets = combinations(m.rows(), k);
  const auto col_sets = combinations(m.cols(), k);
  for (const auto& r : row_sets) {
    for (const auto& c : col_sets) {
      SubmatrixSelector sel{r, c};
      if (!visit(sel, m.submatrix(sel))) return;
    }
  }
}

std::vector<std::pair<SubmatrixSelector, TropicalMatrix>>
all_square_submatrices(const TropicalMatrix& m, std::size_t k) {
  std::vector<std::pair<SubmatrixSelector, TropicalMatrix>> out;
  for_each_square_submatrix(
      m, k, [&](const SubmatrixSelector& sel, const TropicalMatrix& sub) {
        out.emplace_back(sel, sub);
        return true;
      });
  return out;
}

TropicalRank tropical_rank(const TropicalMatrix& m, std::size_t threshold) {
  const std::size_t top = std::min(m.rows(), m.cols());
  if (top > threshold) {
    throw DimensionError("matrix size " + std::to_string(top) +
                         " exceeds enumeration threshold " +
                         std::to_string(threshold));
  }
  for (std::size_t r = top; r >= 1; --r) {
    TropicalRank found;
    for_each_square_submatrix(
        m, r, [&](const SubmatrixSelector& sel, const TropicalMatrix& sub) {
          if (is_tropically_singular(sub, threshold)) return true;
          found.rank = r;
          found.witness = sel;
          return false;
        });
    if (found.rank != 0) return found;
  }
  // Unreachable: every 1x1 submatrix is nonsingular.
  throw Error("tropical rank search found no nonsingular submatrix");
}

}  // namespace tropkap
