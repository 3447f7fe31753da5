#include "tropkap/rational.hpp"

#include <limits>
#include <ostream>

#include "tropkap/error.hpp"

namespace tropkap {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  const bool negative = v < 0;
  u128 mag = negative ? -static_cast<u128>(v) : static_cast<u128>(v);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag),
                                  static_cast<std::uint64_t>(mag >> 64)};
  mpz_class out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (negative) out = -out;
  return out;
}

bool fits_int64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()); }

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error("rational with zero denominator");
  set_from_wide(numerator, denominator);
}

Rational::Rational(const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  set_big(std::move(q));
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

// Hand-written rather than defaulted: GCC 11 at -O3 miscompiles the
// defaulted move assignment inside permanent()'s enumeration loop.
Rational::Rational(Rational&& other) noexcept
    : num_(other.num_), den_(other.den_), big_(std::move(other.big_)) {}

Rational& Rational::operator=(Rational&& other) noexcept {
  num_ = other.num_;
  den_ = other.den_;
  big_ = std::move(other.big_);
  return *this;
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  return *this;
}

void Rational::set_from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 mag = num < 0 ? -static_cast<u128>(num) : static_cast<u128>(num);
  const u128 g = gcd128(mag, static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num >= kMin64 && num <= kMax64 && den <= kMax64) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::set_big(mpq_class value) {
  if (fits_int64(value.get_num()) && fits_int64(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(std::move(value));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from_i128(num_), mpz_from_i128(den_));
}

Rational Rational::from_strings(std::string_view numerator,
                                std::string_view denominator) {
  mpz_class num(std::string(numerator), 10);
  mpz_class den(std::string(denominator), 10);
  if (den == 0) throw Error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  Rational r;
  r.set_big(std::move(q));
  return r;
}

std::string Rational::numerator() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.set_big(-*big_);
  } else {
    r.set_from_wide(-static_cast<i128>(num_), den_);
  }
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      set_from_wide(static_cast<i128>(num_) + other.num_, 1);
    } else {
      set_from_wide(static_cast<i128>(num_) * other.den_ +
                        static_cast<i128>(other.num_) * den_,
                    static_cast<i128>(den_) * other.den_);
    }
    return *this;
  }
  set_big(to_mpq() + other.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
  if (!big_ && !other.big_) {
    set_from_wide(static_cast<i128>(num_) * other.num_,
                  static_cast<i128>(den_) * other.den_);
    return *this;
  }
  set_big(to_mpq() * other.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw Error("division by zero rational");
  if (!big_ && !other.big_) {
    set_from_wide(static_cast<i128>(num_) * other.den_,
                  static_cast<i128>(den_) * other.num_);
    return *this;
  }
  set_big(to_mpq() / other.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  // Canonical forms are unique, and a value that fits inline is never big.
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : lhs > rhs ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace tropkap
