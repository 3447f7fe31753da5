#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "tropkap/puiseux.hpp"
#include "tropkap/tropical.hpp"

namespace tropkap {

/// The 6x6 tropical matrix with tropical rank 4 and Kapranov rank 5.
TropicalMatrix example_matrix_a();

/// An explicit lift of `example_matrix_a()` whose rows sum to zero.
PuiseuxMatrix example_lift_m0();

/// Entrywise valuation. Throws NotALiftError if any entry is zero.
TropicalMatrix degree_matrix(const PuiseuxMatrix& lift);

/// True iff the shapes agree, no entry is zero and every entry has the
/// valuation prescribed by `base`.
bool is_lift(const PuiseuxMatrix& lift, const TropicalMatrix& base);

/// Describes the first cell (zero-based) where `lift` fails to lift `base`.
struct LiftMismatch {
  bool dimension_mismatch = false;
  std::size_t row = 0;
  std::size_t col = 0;
  Valuation found;
  std::string message;
};
std::optional<LiftMismatch> find_lift_mismatch(const PuiseuxMatrix& lift,
                                               const TropicalMatrix& base);

/// A tropical matrix together with a verified lift of it.
class LiftPair {
 public:
  /// Throws NotALiftError unless `lift` lifts `base`.
  LiftPair(TropicalMatrix base, PuiseuxMatrix lift);

  const TropicalMatrix& base() const { return base_; }
  const PuiseuxMatrix& lift() const { return lift_; }

 private:
  TropicalMatrix base_;
  PuiseuxMatrix lift_;
};

/// Rank of `lift` over the series field, which bounds Kap(base) from above.
/// Throws NotALiftError if `lift` does not lift `base`.
std::size_t kapranov_upper_bound(
    const TropicalMatrix& base, const PuiseuxMatrix& lift,
    std::size_t threshold = kDefaultEnumerationThreshold);

/// Lower (tropical rank) and upper (rank of the given lift) bounds.
struct KapranovBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
};
KapranovBounds kapranov_bounds(
    const TropicalMatrix& base, const PuiseuxMatrix& lift,
    std::size_t threshold = kDefaultEnumerationThreshold);

/// Delta = h33*h44 - h34*h43 (one-based entries) of a 6x6 series matrix.
PuiseuxSeries delta_series(const PuiseuxMatrix& lift);
/// deg of `delta_series`.
Valuation delta_of(const PuiseuxMatrix& lift);

enum class DeltaCase { below_one, equal_one, above_one };

/// "lt", "eq" or "gt".
std::string short_name(DeltaCase c);

/// Outcome of the rank-5 certificate for a lift of `example_matrix_a()`.
/// H25 deletes row 2 and column 5, H61 deletes row 6 and column 1
/// (one-based).
struct CertificateReport {
  Valuation delta;
  Valuation deg_h25;
  Valuation deg_h61;
  DeltaCase case_taken = DeltaCase::equal_one;
  /// "H25" or "H61".
  std::string nonzero_minor_name;
  SubmatrixSelector nonzero_minor;
  std::size_t rank_lower_bound = 0;
};

/// Computes delta and the exact minors H25 and H61 and checks the case
/// split: delta > 1 forces deg(H25) = 3, delta < 1 forces
/// deg(H25) = 2 + delta, delta = 1 forces deg(H61) = 2.
///
/// Throws NotALiftError if `lift` does not lift `example_matrix_a()` and
/// CertificateError if the predicted degree is not observed.
CertificateReport certify_rank5(const PuiseuxMatrix& lift);

/// Parameters of `random_lift`.
struct RandomLiftOptions {
  std::uint64_t seed = 0;
  std::size_t max_extra_terms = 3;
  Rational exponent_step = Rational(1, 2);
};

/// Entry (i,j) is c0 t^{m_ij} + sum_{k=1..e} c_k t^{m_ij + k*step} with
/// e uniform in [0, max_extra_terms] and every c drawn from the nonzero
/// integers in [-5, 5]. Deterministic for a given seed.
PuiseuxMatrix random_lift(const TropicalMatrix& base,
                          const RandomLiftOptions& options);

}  // namespace tropkap
