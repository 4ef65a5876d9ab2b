#include "tnfactor/radical.hpp"

#include <cmath>
#include <ostream>

namespace tnfactor {

namespace {

// If r = p/q with p, q both perfect squares, returns sqrt(r) exactly.
bool rational_sqrt_exact(const Rational& r, Rational* out) {
  mpz_class num = r.numerator(), den = r.denominator();
  if (num < 0) return false;
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class snum, sden;
  mpz_sqrt(snum.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sden.get_mpz_t(), den.get_mpz_t());
  *out = Rational(std::move(snum), std::move(sden));
  return true;
}

} // namespace

Radical::Radical(Rational coefficient, Rational radicand)
    : coeff_(std::move(coefficient)), radicand_(std::move(radicand)) {
  if (radicand_.sign() < 0)
    throw Error("radical radicand must be nonnegative, got " + radicand_.str());
  if (Rational root(0); rational_sqrt_exact(radicand_, &root)) {
    coeff_ *= root;
    radicand_ = Rational(1);
  }
  if (coeff_.is_zero()) radicand_ = Rational(1);
}

Radical Radical::parse(std::string_view text) {
  auto parse_sqrt = [](std::string_view s) {
    constexpr std::string_view kPrefix = "sqrt(";
    if (s.substr(0, kPrefix.size()) != kPrefix || s.empty() || s.back() != ')')
      throw Error("invalid radical literal: expected sqrt(...), got '" + std::string(s) + "'");
    return Rational::parse(s.substr(kPrefix.size(), s.size() - kPrefix.size() - 1));
  };
  if (auto star = text.find('*'); star != std::string_view::npos) {
    Rational c = Rational::parse(text.substr(0, star));
    Rational d = parse_sqrt(text.substr(star + 1));
    return Radical(std::move(c), std::move(d));
  }
  if (text.find("sqrt") != std::string_view::npos)
    return Radical(Rational(1), parse_sqrt(text));
  return from_rational(Rational::parse(text));
}

Rational Radical::as_rational() const {
  if (!is_rational())
    throw Error("radical " + str() + " is not rational");
  return coeff_;
}

std::string Radical::str() const {
  if (is_rational()) return coeff_.str();
  return coeff_.str() + "*sqrt(" + radicand_.str() + ")";
}

RadicalProduct radical_mul(const Radical& a, const Radical& b) {
  Rational c = a.coefficient() * b.coefficient();
  if (a.radicand() == b.radicand())
    return RadicalProduct(c * a.radicand());
  Radical r(std::move(c), a.radicand() * b.radicand());
  if (r.is_rational()) return RadicalProduct(r.as_rational());
  return RadicalProduct(std::move(r));
}

double to_double(const Radical& r) {
  return to_double(r.coefficient()) * std::sqrt(to_double(r.radicand()));
}

std::ostream& operator<<(std::ostream& os, const Radical& r) { return os << r.str(); }

} // namespace tnfactor
