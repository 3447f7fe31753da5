#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tropkap/combinatorics.hpp"
#include "tropkap/error.hpp"
#include "tropkap/lifts.hpp"
#include "tropkap/tropical.hpp"

using namespace tropkap;

namespace {

using Idx = std::vector<std::size_t>;

SubmatrixSelector one_based(Idx rows, Idx cols) {
  for (auto& r : rows) --r;
  for (auto& c : cols) --c;
  return SubmatrixSelector{rows, cols};
}

TropicalMatrix permuted(const TropicalMatrix& m, const Idx& row_perm,
                        const Idx& col_perm) {
  std::vector<Rational> e;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      e.push_back(m(row_perm[i], col_perm[j]));
    }
  }
  return TropicalMatrix(m.rows(), m.cols(), std::move(e));
}

}  // namespace

TEST_CASE("min-plus scalar operations") {
  CHECK(trop_add(3, 5) == Rational(3));
  CHECK(trop_add(0, 0) == Rational(0));
  CHECK(trop_add(Rational(-1, 2), Rational(1, 2)) == Rational(-1, 2));
  CHECK(trop_mul(3, 5) == Rational(8));
  CHECK(trop_mul(Rational(7, 3), 0) == Rational(7, 3));
  CHECK(trop_mul(Rational(1, 2), Rational(-1, 2)) == Rational(0));
}

TEST_CASE("matrix construction checks its shape") {
  CHECK_THROWS_AS(TropicalMatrix(0, 1, {}), DimensionError);
  CHECK_THROWS_AS(TropicalMatrix(2, 2, {1, 2, 3}), DimensionError);
  CHECK_THROWS_AS((TropicalMatrix{{1, 2}, {3}}), DimensionError);
  const TropicalMatrix m{{1, 2, 3}, {4, 5, 6}};
  CHECK(m.transposed() == TropicalMatrix{{1, 4}, {2, 5}, {3, 6}});
  CHECK_THROWS_AS(m.submatrix(SubmatrixSelector{{0}, {2, 1}}), DimensionError);
  CHECK_THROWS_AS(m.submatrix(SubmatrixSelector{{2}, {0}}), DimensionError);
  CHECK_THROWS_AS(m.submatrix(SubmatrixSelector{{}, {0}}), DimensionError);
}

TEST_CASE("permanent of the example submatrices") {
  const TropicalMatrix a = example_matrix_a();

  SUBCASE("1x1") {
    const auto cert = permanent(TropicalMatrix{{7}});
    CHECK(cert.value == Rational(7));
    CHECK(cert.optimal_count == 1);
  }
  SUBCASE("leading 5x5 block has four optima") {
    const auto s = a.submatrix(one_based({1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}));
    const auto cert = permanent(s);
    const auto ref = oracle::brute_permanent(s);
    CHECK(cert.value == Rational(0));
    CHECK(cert.optimal_count == 4);
    CHECK(ref.witnesses.size() == 4);
    CHECK(ref.value == cert.value);
  }
  SUBCASE("rows 1-5, cols 2-6: optima (24) and (243)") {
    const auto s = a.submatrix(one_based({1, 2, 3, 4, 5}, {2, 3, 4, 5, 6}));
    const auto cert = permanent(s);
    CHECK(cert.value == Rational(1));
    REQUIRE(cert.optimal_count == 2);
    CHECK(cert.witnesses[0].one_line() == Idx{1, 4, 2, 3, 5});
    CHECK(cert.witnesses[1].one_line() == Idx{1, 4, 3, 2, 5});
    CHECK(oracle::brute_permanent(s).witnesses ==
          std::vector<Idx>{{1, 4, 2, 3, 5}, {1, 4, 3, 2, 5}});
  }
  SUBCASE("4x4 witness has the unique optimum (23)") {
    const auto s = a.submatrix(one_based({1, 2, 4, 6}, {1, 4, 5, 6}));
    CHECK(s == TropicalMatrix{{0, 4, 4, 4}, {0, 4, 1, 4}, {2, 0, 2, 4},
                              {2, 4, 0, 0}});
    const auto cert = permanent(s);
    CHECK(cert.value == Rational(1));
    CHECK(cert.optimal_count == 1);
    CHECK(cert.witnesses[0].to_string() == "[1,3,2,4]");
    CHECK(oracle::brute_permanent(s).value == Rational(1));
  }
}

TEST_CASE("permanent rejects bad shapes") {
  CHECK_THROWS_AS(permanent(TropicalMatrix{{1, 2}}), DimensionError);
  CHECK_THROWS_AS(permanent(TropicalMatrix(9, 9, std::vector<Rational>(81))),
                  DimensionError);
  CHECK_THROWS_AS(permanent(TropicalMatrix(3, 3, std::vector<Rational>(9)), 2),
                  DimensionError);
  CHECK_THROWS_AS(permanent_value_fast(TropicalMatrix{{1, 2}}), DimensionError);
}

TEST_CASE("permanent matches the depth-first oracle, witnesses included") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto s = oracle::random_int_matrix(rng, n, n, 0, 3);
    const auto cert = permanent(s);
    const auto ref = oracle::brute_permanent(s);
    CHECK(cert.value == ref.value);
    REQUIRE(cert.optimal_count == ref.witnesses.size());
    for (std::size_t k = 0; k < ref.witnesses.size(); ++k) {
      CHECK(cert.witnesses[k].one_line() == ref.witnesses[k]);
    }
  }
}

TEST_CASE("assignment fast path equals brute force") {
  CHECK(permanent_value_fast(TropicalMatrix{{7}}) == Rational(7));
  const TropicalMatrix a = example_matrix_a();
  CHECK(permanent_value_fast(a.submatrix(one_based({1, 2, 4, 6}, {1, 4, 5, 6}))) ==
        Rational(1));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 6;  // 2..7
    const auto s = oracle::random_int_matrix(rng, n, n, 0, 9);
    CHECK(permanent_value_fast(s) == permanent(s).value);
  }
  // Rational and negative entries.
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<Rational> e;
    for (std::size_t i = 0; i < n * n; ++i) e.emplace_back(num(rng), den(rng));
    const TropicalMatrix s(n, n, e);
    CHECK(permanent_value_fast(s) == permanent(s).value);
  }
}

TEST_CASE("assignment runs above the enumeration threshold") {
  // Anti-diagonal is the unique optimum of this 12x12 matrix.
  const std::size_t n = 12;
  std::vector<Rational> e(n * n, Rational(5));
  for (std::size_t i = 0; i < n; ++i) e[i * n + (n - 1 - i)] = Rational(1);
  const TropicalMatrix s(n, n, e);
  CHECK(permanent_value_fast(s) == Rational(12));
  CHECK_FALSE(is_tropically_singular_by_assignment(s));
}

TEST_CASE("tropical singularity") {
  CHECK(is_tropically_singular(TropicalMatrix{{0, 0}, {0, 0}}));
  CHECK_FALSE(is_tropically_singular(TropicalMatrix{{0, 1}, {1, 0}}));
  CHECK_FALSE(is_tropically_singular(TropicalMatrix{{3}}));

  const TropicalMatrix a = example_matrix_a();
  CHECK_FALSE(is_tropically_singular(
      a.submatrix(one_based({1, 2, 4, 6}, {1, 4, 5, 6}))));

  std::size_t count = 0;
  for_each_square_submatrix(a, 5, [&](const SubmatrixSelector&,
                                      const TropicalMatrix& sub) {
    ++count;
    CHECK(is_tropically_singular(sub));
    CHECK(is_tropically_singular_by_assignment(sub));
    return true;
  });
  CHECK(count == 36);
}

TEST_CASE("edge-deletion singularity test agrees with enumeration") {
  std::mt19937_64 rng(99);
  std::size_t singular = 0, total = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto s = oracle::random_int_matrix(rng, n, n, 0, 2 + trial % 4);
    const bool expected = is_tropically_singular(s);
    CHECK(is_tropically_singular_by_assignment(s) == expected);
    singular += expected;
    ++total;
  }
  // Both outcomes must actually be exercised.
  CHECK(singular > 20);
  CHECK(total - singular > 20);
}

TEST_CASE("square submatrix enumeration") {
  const TropicalMatrix a = example_matrix_a();
  CHECK(all_square_submatrices(a, 5).size() == 36);
  const auto whole = all_square_submatrices(a, 6);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].second == a);
  CHECK(all_square_submatrices(TropicalMatrix{{1, 2}, {3, 4}}, 1).size() == 4);
  CHECK_THROWS_AS(all_square_submatrices(a, 0), DimensionError);
  CHECK_THROWS_AS(all_square_submatrices(a, 7), DimensionError);

  const auto subs = all_square_submatrices(a, 2);
  CHECK(subs.size() == 225);
  for (std::size_t i = 1; i < subs.size(); ++i) {
    CHECK(subs[i - 1].first < subs[i].first);
  }
}

TEST_CASE("tropical rank") {
  const TropicalMatrix a = example_matrix_a();
  const TropicalRank r = tropical_rank(a);
  CHECK(r.rank == 4);
  CHECK(r.witness == one_based({1, 2, 3, 5}, {1, 3, 4, 5}));
  CHECK_FALSE(is_tropically_singular(a.submatrix(r.witness)));
  CHECK_FALSE(is_tropically_singular(
      a.submatrix(one_based({1, 2, 4, 6}, {1, 4, 5, 6}))));

  CHECK(tropical_rank(TropicalMatrix{{5}}).rank == 1);
  CHECK(tropical_rank(TropicalMatrix(3, 3, std::vector<Rational>(9))).rank == 1);
  CHECK(tropical_rank(TropicalMatrix{{0, 1, 5}}).rank == 1);
  CHECK(tropical_rank(TropicalMatrix{{0, 1}, {1, 0}}).rank == 2);
  CHECK_THROWS_AS(tropical_rank(TropicalMatrix(9, 9, std::vector<Rational>(81))),
                  DimensionError);
}

TEST_CASE("tropical rank invariants") {
  std::mt19937_64 rng(5);
  const TropicalMatrix a = example_matrix_a();
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 1 + (trial * 3) % 5;
    const auto m = trial == 0 ? a : oracle::random_int_matrix(rng, rows, cols, 0, 3);
    const std::size_t r = tropical_rank(m).rank;
    CHECK(r >= 1);
    CHECK(r <= std::min(m.rows(), m.cols()));
    CHECK(tropical_rank(m.transposed()).rank == r);
    const auto pm = permuted(m, oracle::shuffled_indices(rng, m.rows()),
                             oracle::shuffled_indices(rng, m.cols()));
    CHECK(tropical_rank(pm).rank == r);
  }
}

TEST_CASE("shifting one row shifts the permanent and keeps the optima") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> shift(-7, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto s = oracle::random_int_matrix(rng, n, n, 0, 3);
    const std::size_t row = trial % n;
    const Rational c(shift(rng), 1 + trial % 3);
    TropicalMatrix shifted = s;
    for (std::size_t j = 0; j < n; ++j) shifted(row, j) += c;
    const auto before = permanent(s);
    const auto after = permanent(shifted);
    CHECK(after.value == before.value + c);
    CHECK(after.optimal_count == before.optimal_count);
    CHECK(after.witnesses == before.witnesses);
  }
}

TEST_CASE("combinatorics helpers") {
  CHECK(combinations(6, 5).size() == 6);
  CHECK(combinations(4, 0).size() == 1);
  CHECK(combinations(5, 2).front() == Idx{0, 1});
  CHECK(combinations(5, 2).back() == Idx{3, 4});
  CHECK_THROWS_AS(combinations(2, 3), DimensionError);
  CHECK(permutation_sign(Idx{0, 1, 2}) == 1);
  CHECK(permutation_sign(Idx{1, 0, 2}) == -1);
  CHECK(permutation_sign(Idx{1, 2, 0}) == 1);
  CHECK(factorial(8) == 40320);
}
