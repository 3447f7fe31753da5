#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tropkap/error.hpp"
#include "tropkap/lifts.hpp"
#include "tropkap/puiseux.hpp"

using namespace tropkap;

namespace {

PuiseuxSeries t(std::int64_t p, std::int64_t q = 1) {
  return t_power(Rational(p, q));
}

const PuiseuxSeries one(1);

PuiseuxMatrix random_series_matrix(std::mt19937_64& rng, std::size_t n,
                                   std::size_t max_terms) {
  std::vector<PuiseuxSeries> e;
  for (std::size_t i = 0; i < n * n; ++i) {
    e.push_back(oracle::random_series(rng, max_terms));
  }
  return PuiseuxMatrix(n, n, std::move(e));
}

}  // namespace

TEST_CASE("series are canonical") {
  const PuiseuxSeries s(std::vector<Term>{
      {Rational(2), Rational(1)}, {Rational(1), Rational(0)},
      {Rational(-2), Rational(1)}, {Rational(0), Rational(5)},
      {Rational(3), Rational(-1, 2)}});
  REQUIRE(s.terms().size() == 2);
  CHECK(s.terms()[0] == Term{Rational(3), Rational(-1, 2)});
  CHECK(s.terms()[1] == Term{Rational(1), Rational(0)});
  CHECK(PuiseuxSeries(0).is_zero());
  CHECK(PuiseuxSeries::monomial(0, 3).is_zero());
}

TEST_CASE("series addition") {
  CHECK(ps_add(one - t(2), t(2)) == one);
  CHECK(ps_add(t(1), t(1)) == PuiseuxSeries::monomial(2, 1));
  const PuiseuxSeries a = one - t(1, 3) + PuiseuxSeries::monomial(Rational(5, 2), 7);
  CHECK(ps_add(a, PuiseuxSeries()) == a);
  CHECK((a - a).is_zero());
}

TEST_CASE("series multiplication") {
  CHECK(ps_mul(one + t(1), one - t(1)) == one - t(2));
  CHECK(ps_mul(t(1, 2), t(1, 2)) == t(1));
  CHECK(ps_mul(one + t(3), PuiseuxSeries()).is_zero());
  CHECK(ps_mul(t(-1), t(1)) == one);
}

TEST_CASE("valuation") {
  CHECK(deg(PuiseuxSeries()).is_infinite());
  CHECK(deg(one - t(2)) == Valuation(0));
  CHECK(deg(-t(4)) == Valuation(4));
  CHECK(deg(t(-3, 2) + t(5)) == Valuation(Rational(-3, 2)));
  CHECK(Valuation(7) < Valuation::infinity());
  CHECK((Valuation(2) + Valuation::infinity()).is_infinite());
  CHECK(Valuation::infinity().to_string() == "inf");
  CHECK(min(Valuation(3), Valuation::infinity()) == Valuation(3));
  CHECK_THROWS_AS(Valuation::infinity().value(), Error);
}

TEST_CASE("valuation laws on random pairs") {
  std::mt19937_64 rng(123);
  std::size_t distinct = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = oracle::random_series(rng);
    const auto b = oracle::random_series(rng);
    CHECK(deg(a * b) == deg(a) + deg(b));
    CHECK(deg(a + b) >= min(deg(a), deg(b)));
    if (deg(a) != deg(b)) {
      ++distinct;
      CHECK(deg(a + b) == min(deg(a), deg(b)));
    }
  }
  CHECK(distinct > 500);
}

TEST_CASE("ring axioms hold exactly") {
  std::mt19937_64 rng(321);
  for (int i = 0; i < 300; ++i) {
    const auto a = oracle::random_series(rng);
    const auto b = oracle::random_series(rng);
    const auto c = oracle::random_series(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * one == a);
    CHECK((a + (-a)).is_zero());
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(PuiseuxMatrix::identity(2)) == one);
  CHECK(determinant(PuiseuxMatrix{{1, 1}, {1, 1}}).is_zero());
  CHECK(determinant(PuiseuxMatrix{{t(1), 2}, {3, t(1)}}) ==
        t(2) - PuiseuxSeries(6));
  CHECK(determinant(PuiseuxMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == -one);
  CHECK_THROWS_AS(determinant(PuiseuxMatrix{{1, 2}}), DimensionError);
  CHECK_THROWS_AS(determinant(PuiseuxMatrix::identity(9)), DimensionError);
  CHECK_THROWS_AS(determinant(PuiseuxMatrix::identity(3), 2), DimensionError);

  const PuiseuxMatrix m0 = example_lift_m0();
  CHECK(determinant(m0).is_zero());
  // Rows 1-5, columns 2-6; expected expansion computed with a computer
  // algebra system.
  const PuiseuxSeries h61 = determinant(m0.minor_matrix(5, 0));
  const PuiseuxSeries expected =
      t(16) + t(14) + t(13) + t(12) + PuiseuxSeries::monomial(5, 11) -
      PuiseuxSeries::monomial(5, 10) + PuiseuxSeries::monomial(4, 9) +
      PuiseuxSeries::monomial(5, 8) + PuiseuxSeries::monomial(2, 7) - t(6) +
      PuiseuxSeries::monomial(3, 5) + t(4) + t(3) + t(2);
  CHECK(h61 == expected);
  CHECK(deg(h61) == Valuation(2));
  CHECK(determinant(m0.minor_matrix(1, 4)) ==
        t(16) - t(12) + PuiseuxSeries::monomial(2, 10) -
            PuiseuxSeries::monomial(3, 8) + PuiseuxSeries::monomial(2, 6) -
            t(4));
}

TEST_CASE("permutation expansion agrees with cofactor expansion") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    const auto m = random_series_matrix(rng, 4, 3);
    CHECK(determinant(m) == determinant_by_cofactors(m));
  }
  for (int i = 0; i < 5; ++i) {
    const auto m = random_series_matrix(rng, 5, 2);
    CHECK(determinant(m) == determinant_by_cofactors(m));
  }
  const PuiseuxMatrix m0 = example_lift_m0();
  CHECK(determinant_by_cofactors(m0.minor_matrix(5, 0)) ==
        determinant(m0.minor_matrix(5, 0)));
}

TEST_CASE("rank over the series field") {
  CHECK(series_rank(example_lift_m0()) == 5);
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(series_rank(PuiseuxMatrix::identity(n)) == n);
  }
  CHECK(series_rank(PuiseuxMatrix::zero(3, 4)) == 0);
  CHECK(series_rank(PuiseuxMatrix{{1, t(1)}, {t(1), t(2)}}) == 1);
  CHECK(series_rank(PuiseuxMatrix{{1, t(1), 0}}) == 1);
  CHECK_THROWS_AS(series_rank(PuiseuxMatrix::identity(9)), DimensionError);

  const auto sel = find_nonzero_minor(example_lift_m0(), 5);
  REQUIRE(sel.has_value());
  CHECK_FALSE(find_nonzero_minor(example_lift_m0(), 6).has_value());
}

TEST_CASE("series rank is invariant under permutations and transposition") {
  std::mt19937_64 rng(8);
  const PuiseuxMatrix m0 = example_lift_m0();
  for (int trial = 0; trial < 8; ++trial) {
    // Rank-deficient inputs: last row is a combination of the others.
    const std::size_t n = 3 + trial % 2;
    PuiseuxMatrix m = random_series_matrix(rng, n, 2);
    if (trial % 2 == 0) {
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * t(1) - m(1, j);
    }
    const std::size_t r = series_rank(m);
    CHECK(series_rank(m.transposed()) == r);
    const auto rp = oracle::shuffled_indices(rng, n);
    const auto cp = oracle::shuffled_indices(rng, n);
    std::vector<PuiseuxSeries> e;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) e.push_back(m(rp[i], cp[j]));
    }
    CHECK(series_rank(PuiseuxMatrix(n, n, e)) == r);
  }
  CHECK(series_rank(m0.transposed()) == 5);
}

TEST_CASE("row sums") {
  for (const auto& s : row_sum(example_lift_m0())) CHECK(s.is_zero());
  CHECK(row_sum(example_lift_m0()).size() == 6);
  CHECK(row_sum(PuiseuxMatrix::identity(2)) == std::vector<PuiseuxSeries>{1, 1});
  const PuiseuxMatrix row{{t(1), 3, one - t(2)}};
  CHECK(row_sum(row) == std::vector<PuiseuxSeries>{t(1), 3, one - t(2)});
}
