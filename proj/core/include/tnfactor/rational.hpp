#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "tnfactor/errors.hpp"

namespace tnfactor {

/// Arbitrary-precision rational in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. All arithmetic is exact; results
/// are canonical, so equal values have equal representations and the
/// string form is bit-reproducible.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {} // NOLINT: implicit, 3 means 3/1
  Rational(long num, long den);
  Rational(mpz_class num, mpz_class den);
  explicit Rational(mpq_class q);

  /// Parses "p" or "p/q" with optional leading sign. Rejects anything
  /// else (in particular decimal literals; grids are exact by contract).
  static Rational parse(std::string_view text);

  /// Exact value of a finite binary64.
  static Rational from_double(double x);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return mpz_class(q_.get_num()); }
  mpz_class denominator() const { return mpz_class(q_.get_den()); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const;
  /// Exact integer power; negative exponents require a nonzero base.
  Rational pow_int(long e) const;

  /// Canonical serialization: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

private:
  mpq_class q_; // kept canonical
};

/// Round-to-nearest binary64 image. Throws Error when the magnitude
/// overflows the binary64 range.
double to_double(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace tnfactor
