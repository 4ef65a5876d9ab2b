#include "tnfactor/generators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace tnfactor {

Matrix s_matrix(const GridParams& p) {
  const std::size_t n = p.size();
  return Matrix::build_exact(n, n, [&](std::size_t i, std::size_t j) {
    return Rational(1) + p.x[i] * p.y[j];
  });
}

Matrix s_hadamard_int(const GridParams& p, unsigned long m) {
  const std::size_t n = p.size();
  return Matrix::build_exact(n, n, [&](std::size_t i, std::size_t j) {
    return (Rational(1) + p.x[i] * p.y[j]).pow_int(static_cast<long>(m));
  });
}

Matrix s_hadamard_real(const GridParams& p, double r) {
  if (!std::isfinite(r)) throw Error("hadamard exponent must be finite");
  const std::size_t n = p.size();
  return Matrix::build_floating(n, n, [&](std::size_t i, std::size_t j) {
    Rational base = Rational(1) + p.x[i] * p.y[j];
    if (base.sign() <= 0)
      throw Error("real hadamard power needs 1 + x[" + std::to_string(i + 1) + "]*y[" +
                  std::to_string(j + 1) + "] > 0, got " + base.str());
    return std::pow(to_double(base), r);
  });
}

Matrix cauchy_matrix(const std::vector<Rational>& lambda, const std::vector<Rational>& mu) {
  if (lambda.empty() || mu.empty()) throw Error("cauchy grids must be nonempty");
  return Matrix::build_exact(lambda.size(), mu.size(), [&](std::size_t i, std::size_t j) {
    Rational denom = lambda[i] + mu[j];
    if (denom.is_zero())
      throw Error("cauchy denominator lambda[" + std::to_string(i + 1) + "] + mu[" +
                  std::to_string(j + 1) + "] vanishes");
    return Rational(1) / denom;
  });
}

Matrix vandermonde_matrix(const std::vector<Rational>& x) {
  if (x.empty()) throw Error("vandermonde grid must be nonempty");
  const std::size_t n = x.size();
  return Matrix::build_exact(n, n, [&](std::size_t i, std::size_t j) {
    return x[i].pow_int(static_cast<long>(j));
  });
}

ExtendedReal ExtendedReal::parse(const std::string& s) {
  if (s == "inf" || s == "+inf") return plus_infinity();
  if (s == "-inf") return minus_infinity();
  return finite(Rational::parse(s));
}

std::string ExtendedReal::str() const {
  switch (kind) {
    case Kind::finite: return value.str();
    case Kind::plus_infinity: return "inf";
    case Kind::minus_infinity: return "-inf";
  }
  return "?";
}

MeanKind MeanKind::heinz_reciprocal(Rational nu) {
  if (nu < Rational(0) || nu > Rational(1))
    throw Error("heinz parameter nu must lie in [0, 1], got " + nu.str());
  return {Family::heinz_reciprocal, std::move(nu), {}};
}

MeanKind MeanKind::binomial_reciprocal(ExtendedReal alpha) {
  return {Family::binomial_reciprocal, Rational(0), std::move(alpha)};
}

std::string MeanKind::describe() const {
  switch (family) {
    case Family::arithmetic_reciprocal: return "arith-recip";
    case Family::harmonic: return "harmonic";
    case Family::heinz_reciprocal: return "heinz-recip(nu=" + nu.str() + ")";
    case Family::binomial_reciprocal: return "binom-recip(alpha=" + alpha.str() + ")";
    case Family::min: return "min";
    case Family::max: return "max";
    case Family::flat: return "flat";
  }
  return "?";
}

Exponent Exponent::real(double v) {
  if (!std::isfinite(v)) throw Error("exponent must be finite");
  return Exponent(false, 0, v);
}

Exponent Exponent::parse(const std::string& s) {
  if (s.empty()) throw Error("empty exponent");
  bool integral = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) continue;
    if ((c == '+' || c == '-') && i == 0) continue;
    integral = false;
    break;
  }
  if (integral) {
    errno = 0;
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (errno != 0 || end == nullptr || *end != '\0')
      throw Error("invalid integer exponent: '" + s + "'");
    return integer(v);
  }
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == nullptr || *end != '\0' || !std::isfinite(v))
    throw Error("invalid exponent: '" + s + "'");
  return real(v);
}

long Exponent::as_integer() const {
  if (!is_integer_) throw Error("exponent is not an integer");
  return integer_;
}

std::string Exponent::str() const {
  if (is_integer_) return std::to_string(integer_);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", real_);
  std::string s = buf;
  // Keep real exponents distinguishable from integer ones on re-parse.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

namespace {

Matrix mean_exact(const MeanKind& kind, const std::vector<Rational>& lam, long r) {
  const std::size_t n = lam.size();
  return Matrix::build_exact(n, n, [&](std::size_t i, std::size_t j) -> Rational {
    const Rational &a = lam[i], &b = lam[j];
    switch (kind.family) {
      case MeanKind::Family::arithmetic_reciprocal:
        return (Rational(2) / (a + b)).pow_int(r);
      case MeanKind::Family::harmonic:
        return (Rational(2) * a * b / (a + b)).pow_int(r);
      case MeanKind::Family::min:
        return (a <= b ? a : b).pow_int(r);
      case MeanKind::Family::max:
        return (Rational(1) / (a >= b ? a : b)).pow_int(r);
      case MeanKind::Family::flat:
        return Rational(1);
      default:
        throw Error("family has no exact form");
    }
  });
}

Matrix mean_floating(const MeanKind& kind, const std::vector<Rational>& lam, double r) {
  const std::size_t n = lam.size();
  std::vector<double> lf(n);
  for (std::size_t i = 0; i < n; ++i) lf[i] = to_double(lam[i]);

  double nu = 0, one_minus_nu = 0, alpha = 0;
  if (kind.family == MeanKind::Family::heinz_reciprocal) {
    // Both exponents from the exact parameter, so nu and 1-nu kinds
    // produce bitwise-identical matrices.
    nu = to_double(kind.nu);
    one_minus_nu = to_double(Rational(1) - kind.nu);
  }
  if (kind.family == MeanKind::Family::binomial_reciprocal && kind.alpha.is_finite())
    alpha = to_double(kind.alpha.value);

  return Matrix::build_floating(n, n, [&](std::size_t i, std::size_t j) -> double {
    double a = lf[i], b = lf[j];
    switch (kind.family) {
      case MeanKind::Family::arithmetic_reciprocal:
        return std::pow(0.5 * (a + b), -r);
      case MeanKind::Family::harmonic:
        return std::pow(2.0 * a * b / (a + b), r);
      case MeanKind::Family::heinz_reciprocal: {
        double hz = 0.5 * (std::pow(a, nu) * std::pow(b, one_minus_nu) +
                           std::pow(a, one_minus_nu) * std::pow(b, nu));
        return std::pow(hz, -r);
      }
      case MeanKind::Family::binomial_reciprocal: {
        if (kind.alpha.kind == ExtendedReal::Kind::plus_infinity)
          return std::pow(std::max(a, b), -r);
        if (kind.alpha.kind == ExtendedReal::Kind::minus_infinity)
          return std::pow(std::min(a, b), r);
        if (alpha == 0.0) return std::pow(a * b, -0.5 * r);
        double core = 0.5 * (std::pow(a, alpha) + std::pow(b, alpha));
        // alpha > 0: reciprocal power of B_alpha; alpha < 0: B_alpha
        // itself (the Hadamard power of B_{-|alpha|} = ab / B_{|alpha|}).
        return alpha > 0 ? std::pow(core, -r / alpha) : std::pow(core, r / alpha);
      }
      case MeanKind::Family::min:
        return std::pow(std::min(a, b), r);
      case MeanKind::Family::max:
        return std::pow(std::max(a, b), -r);
      case MeanKind::Family::flat:
        return 1.0;
    }
    throw Error("unreachable");
  });
}

bool exact_capable(MeanKind::Family f) {
  switch (f) {
    case MeanKind::Family::arithmetic_reciprocal:
    case MeanKind::Family::harmonic:
    case MeanKind::Family::min:
    case MeanKind::Family::max:
    case MeanKind::Family::flat:
      return true;
    default:
      return false;
  }
}

} // namespace

Matrix mean_matrix(const MeanKind& kind, const std::vector<Rational>& lambda, const Exponent& r) {
  require_ordering(lambda, Ordering::strictly_increasing_positive, "lambda");
  if (kind.family == MeanKind::Family::heinz_reciprocal &&
      (kind.nu < Rational(0) || kind.nu > Rational(1)))
    throw Error("heinz parameter nu must lie in [0, 1], got " + kind.nu.str());

  // The binomial limits coincide with other kinds; canonicalize before
  // the exactness dispatch so e.g. alpha = -inf at an integer exponent
  // yields the exact min matrix.
  MeanKind canonical = kind;
  if (kind.family == MeanKind::Family::binomial_reciprocal) {
    if (kind.alpha.kind == ExtendedReal::Kind::plus_infinity)
      canonical = MeanKind::max();
    else if (kind.alpha.kind == ExtendedReal::Kind::minus_infinity)
      canonical = MeanKind::min();
    else if (kind.alpha.value.is_zero())
      canonical = MeanKind::heinz_reciprocal(Rational(1, 2));
  }

  if (r.is_integer() && exact_capable(canonical.family))
    return mean_exact(canonical, lambda, r.as_integer());
  return mean_floating(canonical, lambda, r.as_double());
}

} // namespace tnfactor
