#include "tnfactor/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <ostream>

namespace tnfactor {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational denominator must be nonzero");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
  if (den == 0) throw Error("rational denominator must be nonzero");
  q_ = mpq_class(std::move(num));
  q_ /= mpq_class(std::move(den));
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto is_int_literal = [](std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_int_literal(den) || den.front() == '+' || den.front() == '-')
      throw Error("invalid rational literal: '" + std::string(text) + "'");
  }
  if (!is_int_literal(num))
    throw Error("invalid rational literal: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1); // mpz_set_str rejects a leading plus
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw Error("rational denominator must be nonzero: '" + std::string(text) + "'");
  return Rational(std::move(n), std::move(d));
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw Error("cannot convert non-finite double to rational");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rational(std::move(q));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long mag = invert ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  if (invert && is_zero()) throw Error("zero cannot be raised to a negative power");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), mag);
  return invert ? Rational(std::move(den), std::move(num))
                : Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error("division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

double to_double(const Rational& r) {
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set_q(t, r.raw().get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  if (!std::isfinite(d))
    throw Error("rational magnitude overflows binary64: " + r.str());
  return d;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace tnfactor
