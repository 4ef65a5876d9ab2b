#pragma once

#include <string>
#include <vector>

#include "tnfactor/grid.hpp"
#include "tnfactor/matrix.hpp"

namespace tnfactor {

/// Exact n x n matrix with entries 1 + x_i * y_j.
Matrix s_matrix(const GridParams& p);

/// Exact entrywise integer Hadamard power, entries (1 + x_i y_j)^m.
Matrix s_hadamard_int(const GridParams& p, unsigned long m);

/// Float entrywise real Hadamard power. Requires 1 + x_i y_j > 0.
Matrix s_hadamard_real(const GridParams& p, double r);

/// Exact entries 1 / (lambda_i + mu_j). Requires nonzero denominators.
Matrix cauchy_matrix(const std::vector<Rational>& lambda, const std::vector<Rational>& mu);

/// Exact entries x_i^(j-1), with x^0 = 1 for every node.
Matrix vandermonde_matrix(const std::vector<Rational>& x);

/// Rational value or a signed infinity; used for the binomial-mean
/// parameter alpha.
struct ExtendedReal {
  enum class Kind { finite, plus_infinity, minus_infinity };
  Kind kind = Kind::finite;
  Rational value{0};

  static ExtendedReal finite(Rational v) { return {Kind::finite, std::move(v)}; }
  static ExtendedReal plus_infinity() { return {Kind::plus_infinity, Rational(0)}; }
  static ExtendedReal minus_infinity() { return {Kind::minus_infinity, Rational(0)}; }
  static ExtendedReal parse(const std::string& s);

  bool is_finite() const { return kind == Kind::finite; }
  std::string str() const;

  friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;
};

/// Mean-matrix family selector.
///
/// The generated matrix is always the positivity-relevant one:
///   arithmetic_reciprocal  [1/A(l_i,l_j)^r]
///   harmonic               [H(l_i,l_j)^r]
///   heinz_reciprocal       [1/Heinz_nu(l_i,l_j)^r],   nu in [0,1]
///   binomial_reciprocal    [1/B_alpha(l_i,l_j)^r]   for alpha >= 0,
///                          [B_alpha(l_i,l_j)^r]     for alpha < 0
///                          (B_{-a} = ab/B_a, whose power is the matrix
///                          of interest; alpha=0 coincides with Heinz
///                          nu=1/2, alpha=+inf with `max`, alpha=-inf
///                          with `min`)
///   min                    [min(l_i,l_j)^r]
///   max                    [1/max(l_i,l_j)^r]
///   flat                   all-ones
struct MeanKind {
  enum class Family {
    arithmetic_reciprocal,
    harmonic,
    heinz_reciprocal,
    binomial_reciprocal,
    min,
    max,
    flat
  };

  Family family = Family::arithmetic_reciprocal;
  Rational nu{1, 2};                              // heinz only
  ExtendedReal alpha = ExtendedReal::finite(Rational(1)); // binomial only

  static MeanKind arithmetic_reciprocal() { return {Family::arithmetic_reciprocal, Rational(0), {}}; }
  static MeanKind harmonic() { return {Family::harmonic, Rational(0), {}}; }
  static MeanKind heinz_reciprocal(Rational nu);
  static MeanKind binomial_reciprocal(ExtendedReal alpha);
  static MeanKind min() { return {Family::min, Rational(0), {}}; }
  static MeanKind max() { return {Family::max, Rational(0), {}}; }
  static MeanKind flat() { return {Family::flat, Rational(0), {}}; }

  std::string describe() const;

  friend bool operator==(const MeanKind&, const MeanKind&) = default;
};

/// Integer exponent (exact-capable) or real exponent (float output).
class Exponent {
public:
  static Exponent integer(long v) { return Exponent(true, v, static_cast<double>(v)); }
  static Exponent real(double v);
  /// "3" parses as an integer exponent, "3.7" or "0.5" as real.
  static Exponent parse(const std::string& s);

  bool is_integer() const { return is_integer_; }
  long as_integer() const;
  double as_double() const { return real_; }
  std::string str() const;

private:
  Exponent(bool is_int, long i, double d) : is_integer_(is_int), integer_(i), real_(d) {}
  bool is_integer_;
  long integer_;
  double real_;
};

/// Mean matrix for the selected family on a strictly increasing positive
/// grid. Output is exact when the family is algebraically rational and
/// the exponent is an integer (arithmetic_reciprocal, harmonic, min,
/// max, flat); float otherwise.
Matrix mean_matrix(const MeanKind& kind, const std::vector<Rational>& lambda, const Exponent& r);

} // namespace tnfactor
