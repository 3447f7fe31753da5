#include "tropkap/lifts.hpp"

#include <array>
#include <random>

#include "tropkap/error.hpp"

namespace tropkap {

TropicalMatrix example_matrix_a() {
  return TropicalMatrix{
      {0, 0, 4, 4, 4, 4},
      {0, 0, 2, 4, 1, 4},
      {4, 4, 0, 0, 4, 4},
      {2, 4, 0, 0, 2, 4},
      {4, 4, 4, 4, 0, 0},
      {2, 4, 1, 4, 0, 0},
  };
}

PuiseuxMatrix example_lift_m0() {
  const auto t = [](std::int64_t e) { return t_power(Rational(e)); };
  const PuiseuxSeries one(1);
  return PuiseuxMatrix{
      {one, one, t(4), t(4), t(4), t(4)},
      {-one, -one, t(2), t(4), t(1), t(4)},
      {t(4), t(4), one - t(2), one, -t(4), -t(4)},
      {t(2), t(4), -one - t(1), -one, t(2), -t(4)},
      {-t(4), -t(4), -t(4), -t(4), -one - t(2), one},
      {-t(2), -t(4), t(1), -t(4), one - t(1), -one},
  };
}

TropicalMatrix degree_matrix(const PuiseuxMatrix& lift) {
  std::vector<Rational> out;
  out.reserve(lift.rows() * lift.cols());
  for (std::size_t i = 0; i < lift.rows(); ++i) {
    for (std::size_t j = 0; j < lift.cols(); ++j) {
      const Valuation v = deg(lift(i, j));
      if (v.is_infinite()) {
        throw NotALiftError("entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) +
                            ") is zero and has no tropical image");
      }
      out.push_back(v.value());
    }
  }
  return TropicalMatrix(lift.rows(), lift.cols(), std::move(out));
}

std::optional<LiftMismatch> find_lift_mismatch(const PuiseuxMatrix& lift,
                                               const TropicalMatrix& base) {
  if (lift.rows() != base.rows() || lift.cols() != base.cols()) {
    LiftMismatch m;
    m.dimension_mismatch = true;
    m.message = "dimension mismatch: series matrix is " +
                std::to_string(lift.rows()) + "x" +
                std::to_string(lift.cols()) + ", tropical matrix is " +
                std::to_string(base.rows()) + "x" +
                std::to_string(base.cols());
    return m;
  }
  for (std::size_t i = 0; i < lift.rows(); ++i) {
    for (std::size_t j = 0; j < lift.cols(); ++j) {
      const Valuation v = deg(lift(i, j));
      if (v == Valuation(base(i, j))) continue;
      LiftMismatch m;
      m.row = i;
      m.col = j;
      m.found = v;
      m.message = "cell (" + std::to_string(i + 1) + "," +
                  std::to_string(j + 1) + "): " +
                  (v.is_infinite() ? std::string("entry is zero")
                                   : "deg " + v.to_string()) +
                  ", expected " + base(i, j).to_string();
      return m;
    }
  }
  return std::nullopt;
}

bool is_lift(const PuiseuxMatrix& lift, const TropicalMatrix& base) {
  return !find_lift_mismatch(lift, base).has_value();
}

LiftPair::LiftPair(TropicalMatrix base, PuiseuxMatrix lift)
    : base_(std::move(base)), lift_(std::move(lift)) {
  if (auto mismatch = find_lift_mismatch(lift_, base_)) {
    throw NotALiftError("not a lift: " + mismatch->message);
  }
}

std::size_t kapranov_upper_bound(const TropicalMatrix& base,
                                 const PuiseuxMatrix& lift,
                                 std::size_t threshold) {
  const LiftPair pair(base, lift);
  return series_rank(pair.lift(), threshold);
}

KapranovBounds kapranov_bounds(const TropicalMatrix& base,
                               const PuiseuxMatrix& lift,
                               std::size_t threshold) {
  KapranovBounds b;
  b.upper = kapranov_upper_bound(base, lift, threshold);
  b.lower = tropical_rank(base, threshold).rank;
  return b;
}

PuiseuxSeries delta_series(const PuiseuxMatrix& lift) {
  if (lift.rows() != 6 || lift.cols() != 6) {
    throw DimensionError("delta is defined for 6x6 matrices only");
  }
  return lift(2, 2) * lift(3, 3) - lift(2, 3) * lift(3, 2);
}

Valuation delta_of(const PuiseuxMatrix& lift) {
  return deg(delta_series(lift));
}

std::string short_name(DeltaCase c) {
  switch (c) {
    case DeltaCase::below_one:
      return "lt";
    case DeltaCase::equal_one:
      return "eq";
    case DeltaCase::above_one:
      return "gt";
  }
  return "?";
}

namespace {

SubmatrixSelector deleting(std::size_t row, std::size_t col) {
  SubmatrixSelector sel;
  for (std::size_t i = 0; i < 6; ++i) {
    if (i != row) sel.rows.push_back(i);
    if (i != col) sel.cols.push_back(i);
  }
  return sel;
}

}  // namespace

CertificateReport certify_rank5(const PuiseuxMatrix& lift) {
  const LiftPair pair(example_matrix_a(), lift);

  const SubmatrixSelector h25_sel = deleting(1, 4);
  const SubmatrixSelector h61_sel = deleting(5, 0);
  const PuiseuxSeries h25 = determinant(lift.submatrix(h25_sel));
  const PuiseuxSeries h61 = determinant(lift.submatrix(h61_sel));

  CertificateReport report;
  report.delta = delta_of(lift);
  report.deg_h25 = deg(h25);
  report.deg_h61 = deg(h61);

  const Valuation one(1);
  Valuation predicted;
  Valuation observed;
  if (report.delta > one) {
    report.case_taken = DeltaCase::above_one;
    predicted = Valuation(3);
    observed = report.deg_h25;
  } else if (report.delta < one) {
    report.case_taken = DeltaCase::below_one;
    predicted = Valuation(2) + report.delta;
    observed = report.deg_h25;
  } else {
    report.case_taken = DeltaCase::equal_one;
    predicted = Valuation(2);
    observed = report.deg_h61;
  }
  const bool uses_h61 = report.case_taken == DeltaCase::equal_one;
  report.nonzero_minor_name = uses_h61 ? "H61" : "H25";
  report.nonzero_minor = uses_h61 ? h61_sel : h25_sel;

  if (observed != predicted) {
    throw CertificateError("case " + short_name(report.case_taken) +
                           " (delta=" + report.delta.to_string() +
                           ") predicts deg(" + report.nonzero_minor_name +
                           ")=" + predicted.to_string() + ", observed " +
                           observed.to_string());
  }
  // A finite predicted degree means the named minor is a nonzero series.
  report.rank_lower_bound = 5;
  return report;
}

PuiseuxMatrix random_lift(const TropicalMatrix& base,
                          const RandomLiftOptions& options) {
  if (options.exponent_step.sign() <= 0) {
    throw Error("exponent step must be positive");
  }
  static constexpr std::array<std::int64_t, 10> kPool = {-5, -4, -3, -2, -1,
                                                         1,  2,  3,  4,  5};
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, kPool.size() - 1);
  std::uniform_int_distribution<std::size_t> extra(0, options.max_extra_terms);

  std::vector<PuiseuxSeries> entries;
  entries.reserve(base.rows() * base.cols());
  for (std::size_t i = 0; i < base.rows(); ++i) {
    for (std::size_t j = 0; j < base.cols(); ++j) {
      std::vector<Term> terms;
      const std::size_t e = extra(rng);
      Rational exponent = base(i, j);
      terms.push_back(Term{Rational(kPool[pick(rng)]), exponent});
      for (std::size_t k = 1; k <= e; ++k) {
        exponent += options.exponent_step;
        terms.push_back(Term{Rational(kPool[pick(rng)]), exponent});
      }
      entries.emplace_back(std::move(terms));
    }
  }
  return PuiseuxMatrix(base.rows(), base.cols(), std::move(entries));
}

}  // namespace tropkap
