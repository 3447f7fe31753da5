#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropkap {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are held inline;
/// anything larger is promoted to a GMP rational and demoted again once
/// it fits.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept;
  ~Rational() = default;

  /// Builds from decimal digit strings (optional leading '-');
  /// `denominator` must be nonzero.
  static Rational from_strings(std::string_view numerator,
                               std::string_view denominator = "1");

  std::string numerator() const;
  std::string denominator() const;
  bool is_integer() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  int sign() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  mpq_class to_mpq() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  __extension__ typedef __int128 wide_int;
  void set_from_wide(wide_int num, wide_int den);
  void set_big(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;  // when set, num_/den_ are unused
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

}  // namespace tropkap
