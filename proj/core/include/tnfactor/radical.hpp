#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "tnfactor/rational.hpp"

namespace tnfactor {

/// Value of the form coefficient * sqrt(radicand) with both parts exact
/// rationals and radicand >= 0. The radicand is stored as given except
/// that a perfect-square rational folds into the coefficient (so a
/// rational value is always represented with radicand 1, and zero as
/// 0 * sqrt(1)). No further simplification is attempted: products only
/// ever need to match radicands, not factor them.
class Radical {
public:
  Radical() : coeff_(0), radicand_(1) {}
  Radical(Rational coefficient, Rational radicand);

  static Radical from_rational(const Rational& r) { return Radical(r, Rational(1)); }
  static Radical sqrt_of(const Rational& radicand) { return Radical(Rational(1), radicand); }

  /// Parses "c", "c*sqrt(d)" or "sqrt(d)" with c, d rational literals.
  static Radical parse(std::string_view text);

  const Rational& coefficient() const { return coeff_; }
  const Rational& radicand() const { return radicand_; }

  bool is_zero() const { return coeff_.is_zero(); }
  bool is_rational() const { return radicand_ == Rational(1); }
  Rational as_rational() const;

  /// Canonical serialization "c*sqrt(d)" (plain "c" when radicand is 1).
  std::string str() const;

  friend bool operator==(const Radical& a, const Radical& b) {
    return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
  }
  friend bool operator!=(const Radical& a, const Radical& b) { return !(a == b); }

private:
  Rational coeff_;
  Rational radicand_;
};

/// Product of two radicals. Equal radicands resolve exactly to a
/// Rational (c_a * c_b * d); otherwise the result keeps the product
/// radicand, which may itself fold to a Rational if it is a perfect
/// square.
using RadicalProduct = std::variant<Rational, Radical>;
RadicalProduct radical_mul(const Radical& a, const Radical& b);

/// coefficient * sqrt(radicand), both through their binary64 images.
double to_double(const Radical& r);

std::ostream& operator<<(std::ostream& os, const Radical& r);

} // namespace tnfactor
