#include <doctest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "tropkap/error.hpp"
#include "tropkap/lifts.hpp"
#include "tropkap/parse_io.hpp"

using namespace tropkap;

namespace {

PuiseuxSeries series(std::vector<std::pair<Rational, Rational>> terms) {
  std::vector<Term> out;
  for (auto& [c, e] : terms) out.push_back(Term{c, e});
  return PuiseuxSeries(std::move(out));
}

std::size_t error_position(std::string_view text) {
  try {
    parse_series(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for " << std::string(text));
  return 0;
}

}  // namespace

TEST_CASE("rational literals") {
  CHECK(parse_rational("4") == Rational(4));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("  +7/3 ") == Rational(7, 3));
  CHECK(parse_rational("\xE2\x88\x92" "2") == Rational(-2));
  CHECK(parse_rational("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("--1"), ParseError);
  try {
    parse_rational("12x");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("series literals") {
  CHECK(parse_series("-1-t") == series({{-1, 0}, {-1, 1}}));
  CHECK(parse_series("0").is_zero());
  CHECK(parse_series("t^(1/2) + 2*t") ==
        series({{1, Rational(1, 2)}, {2, 1}}));
  CHECK(parse_series("1 - t^2") == series({{1, 0}, {-1, 2}}));
  CHECK(parse_series("\xE2\x88\x92" "1 \xE2\x88\x92 t") == parse_series("-1-t"));
  CHECK(parse_series("  t ^ ( -3 / 6 ) ") == series({{1, Rational(-1, 2)}}));
  CHECK(parse_series("t^-2") == series({{1, -2}}));
  CHECK(parse_series("3/4*t^4 + 1/4 * t^4") == series({{1, 4}}));
  CHECK(parse_series("t - t").is_zero());
  CHECK(parse_series("+5") == PuiseuxSeries(5));
}

TEST_CASE("series syntax errors carry positions") {
  CHECK(error_position("") == 0);
  CHECK(error_position("1 +") == 3);
  CHECK(error_position("2t") == 1);
  CHECK(error_position("t^1/2") == 3);
  CHECK(error_position("t^(1/2") == 6);
  CHECK(error_position("x") == 0);
  CHECK(error_position("1 + * t") == 4);
  CHECK(error_position("t^(1/0)") == 5);
  try {
    parse_series("1 + 2*x");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("expected 't'") != std::string::npos);
  }
}

TEST_CASE("series formatting") {
  CHECK(format_series(PuiseuxSeries()) == "0");
  CHECK(format_series(series({{1, 0}, {-1, 2}})) == "1 - t^2");
  CHECK(format_series(series({{1, Rational(1, 2)}})) == "t^(1/2)");
  CHECK(format_series(series({{-1, 0}, {-1, 1}})) == "-1 - t");
  CHECK(format_series(series({{Rational(-5, 2), Rational(-1, 3)}, {-3, -1}})) ==
        "-3*t^-1 - 5/2*t^(-1/3)");
}

TEST_CASE("format and parse round-trip") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 500; ++i) {
    PuiseuxSeries s = oracle::random_series(rng);
    if (i % 3 == 0) s = s * PuiseuxSeries(Rational(1, 7));
    const std::string text = format_series(s);
    CHECK(parse_series(text) == s);
    CHECK(format_series(parse_series(text)) == text);
  }
}

TEST_CASE("arbitrary bytes never crash the parsers") {
  std::mt19937_64 rng(1);
  const std::string alphabet = "0123456789t^()/*+- ;#\n\t\xE2\x88\x92x.";
  std::uniform_int_distribution<std::size_t> len(0, 24);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::size_t accepted = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string text;
    const std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k) {
      text += i % 2 ? static_cast<char>(byte(rng)) : alphabet[pick(rng)];
    }
    try {
      const auto s = parse_series(text);
      ++accepted;
      CHECK(parse_series(format_series(s)) == s);
    } catch (const ParseError& e) {
      CHECK(e.position() <= text.size());
    }
    try {
      parse_tropical_matrix(text);
    } catch (const ParseError&) {
    }
    try {
      parse_puiseux_matrix(text);
    } catch (const ParseError&) {
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("tropical matrix text") {
  const std::string table =
      "# example\n"
      "0 0 4 4 4 4\n0 0 2 4 1 4\n4 4 0 0 4 4\n"
      "\n"
      "2 4 0 0 2 4\n4 4 4 4 0 0\n2 4 1 4 0 0\n";
  CHECK(parse_tropical_matrix(table) == example_matrix_a());
  CHECK(parse_tropical_matrix("0") == TropicalMatrix{{0}});
  CHECK(parse_tropical_matrix("1/2\t-3\r\n") ==
        TropicalMatrix{{Rational(1, 2), -3}});
  CHECK_THROWS_AS(parse_tropical_matrix("0 1\n2"), ParseError);
  CHECK_THROWS_AS(parse_tropical_matrix("# only a comment\n"), ParseError);
  try {
    parse_tropical_matrix("0 1\n2 x3");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK(parse_tropical_matrix(format_tropical_matrix(example_matrix_a())) ==
        example_matrix_a());
}

TEST_CASE("series matrix text") {
  CHECK(parse_puiseux_matrix("1; t") == PuiseuxMatrix{{1, t_power(1)}});
  CHECK_THROWS_AS(parse_puiseux_matrix("1; t\nt"), ParseError);
  CHECK_THROWS_AS(parse_puiseux_matrix("1;"), ParseError);
  try {
    parse_puiseux_matrix("1; t\nt; 2*q");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("row 2, cell 2") != std::string::npos);
  }
  const PuiseuxMatrix m0 = example_lift_m0();
  CHECK(parse_puiseux_matrix(format_puiseux_matrix(m0)) == m0);
}

TEST_CASE("shipped data files match the built-in constants") {
  const std::string dir = TROPKAP_DATA_DIR;
  CHECK(load_tropical_matrix(dir + "/A.tmat") == example_matrix_a());
  CHECK(load_puiseux_matrix(dir + "/M0.pmat") == example_lift_m0());
  CHECK(is_lift(load_puiseux_matrix(dir + "/M0_delta0.pmat"), example_matrix_a()));
  CHECK(is_lift(load_puiseux_matrix(dir + "/M0_delta2.pmat"), example_matrix_a()));
  CHECK_THROWS_AS(load_tropical_matrix(dir + "/missing.tmat"), Error);
}
