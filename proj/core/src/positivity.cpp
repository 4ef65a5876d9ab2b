#include "tnfactor/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace tnfactor {

std::string to_string(Property p) { return p == Property::tp ? "tp" : "tn"; }

std::string to_string(CheckMode m) { return m == CheckMode::exact ? "exact" : "float"; }

std::string to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::holds: return "holds";
    case CheckOutcome::fails: return "fails";
    case CheckOutcome::indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

constexpr std::size_t kDefaultSizeCap = 10;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

enum class MinorClass { positive, negative, zero, indeterminate };

// Sign classification of a float minor against the Hadamard-style
// scale (product of row sup-norms). A zero row or zero column makes
// the determinant an exact zero regardless of rounding.
MinorClass classify_float_minor(const Matrix& sub, double tol, double* value) {
  double scale = 1.0;
  for (std::size_t i = 0; i < sub.rows(); ++i) {
    double sup = 0.0;
    for (std::size_t j = 0; j < sub.cols(); ++j)
      sup = std::max(sup, std::fabs(sub.at_floating(i, j)));
    if (sup == 0.0) {
      *value = 0.0;
      return MinorClass::zero;
    }
    scale *= sup;
  }
  for (std::size_t j = 0; j < sub.cols(); ++j) {
    bool zero_col = true;
    for (std::size_t i = 0; i < sub.rows() && zero_col; ++i)
      zero_col = sub.at_floating(i, j) == 0.0;
    if (zero_col) {
      *value = 0.0;
      return MinorClass::zero;
    }
  }
  double m = det_float(sub);
  *value = m;
  if (m > tol * scale) return MinorClass::positive;
  if (m < -tol * scale) return MinorClass::negative;
  return MinorClass::indeterminate;
}

PositivityVerdict check_impl(const Matrix& a, std::size_t k, const CheckOptions& opts,
                             Property property) {
  if (k < 1 || k > std::min(a.rows(), a.cols()))
    throw Error("minor order k must lie in [1, min(rows, cols)], got " + std::to_string(k));
  if (std::max(a.rows(), a.cols()) > kDefaultSizeCap && !opts.allow_large)
    throw Error("matrix exceeds the default " + std::to_string(kDefaultSizeCap) +
                "-row enumeration cap; pass allow_large to override");
  if (opts.mode == CheckMode::exact && a.kind() != ScalarKind::exact)
    throw Error("exact positivity checks require an exact matrix");

  const Matrix work = opts.mode == CheckMode::floating && a.kind() != ScalarKind::floating
                          ? a.to_floating()
                          : a;

  PositivityVerdict verdict;
  verdict.property = property;
  verdict.order = k;
  verdict.mode = opts.mode;
  verdict.tol = opts.mode == CheckMode::floating ? opts.tol : 0.0;

  for (std::size_t order = 1; order <= k; ++order) {
    auto rows = first_combination(order);
    do {
      auto cols = first_combination(order);
      do {
        MinorSpec spec(rows, cols);
        ++verdict.minors_evaluated;
        if (opts.mode == CheckMode::exact) {
          Rational v = minor_exact(work, spec);
          bool violates = property == Property::tp ? v.sign() <= 0 : v.sign() < 0;
          if (violates) {
            verdict.outcome = CheckOutcome::fails;
            verdict.witness = spec;
            verdict.witness_value = v.str();
            return verdict;
          }
        } else {
          double v = 0;
          switch (classify_float_minor(submatrix(work, spec), opts.tol, &v)) {
            case MinorClass::positive:
              break;
            case MinorClass::zero:
              if (property == Property::tp) {
                verdict.outcome = CheckOutcome::fails;
                verdict.witness = spec;
                verdict.witness_value = "0";
                return verdict;
              }
              break;
            case MinorClass::negative:
              verdict.outcome = CheckOutcome::fails;
              verdict.witness = spec;
              verdict.witness_value = format_double(v);
              return verdict;
            case MinorClass::indeterminate:
              if (verdict.indeterminate_count == 0) verdict.first_indeterminate = spec;
              ++verdict.indeterminate_count;
              break;
          }
        }
      } while (next_combination(cols, work.cols()));
    } while (next_combination(rows, work.rows()));
  }
  verdict.outcome = CheckOutcome::holds;
  return verdict;
}

} // namespace

PositivityVerdict check_tp(const Matrix& a, std::size_t k, const CheckOptions& opts) {
  return check_impl(a, k, opts, Property::tp);
}

PositivityVerdict check_tn(const Matrix& a, std::size_t k, const CheckOptions& opts) {
  return check_impl(a, k, opts, Property::tn);
}

std::size_t rank_of_hadamard_power(const GridParams& p, unsigned long m) {
  require_ordering(p.x, Ordering::strictly_increasing, "x");
  require_ordering(p.y, Ordering::strictly_increasing, "y");
  if (p.size() < 2 || m > p.size() - 2)
    throw Error("hadamard rank law needs 0 <= m <= n-2, got m = " + std::to_string(m) +
                " with n = " + std::to_string(p.size()));
  return rank_exact(s_hadamard_int(p, m));
}

ThresholdScanReport scan_hadamard_threshold(const GridParams& p, std::vector<double> exponents,
                                            std::size_t k, double tol) {
  require_ordering(p.x, Ordering::strictly_increasing_positive, "x");
  require_ordering(p.y, Ordering::strictly_increasing_positive, "y");
  std::sort(exponents.begin(), exponents.end());

  ThresholdScanReport report;
  report.x = p.x;
  report.y = p.y;
  report.order = k;
  report.tol = tol;
  report.claimed_boundary = p.size() >= 2 ? p.size() - 2 : 0;

  for (double r : exponents) {
    if (!std::isfinite(r) || r < 0) throw Error("scan exponents must be finite and nonnegative");
    ThresholdSample sample;
    sample.r = r;
    sample.exact_arithmetic = r == std::floor(r);
    if (sample.exact_arithmetic) {
      Matrix m = s_hadamard_int(p, static_cast<unsigned long>(r));
      CheckOptions opts{CheckMode::exact, 0.0, false};
      sample.tp = check_tp(m, k, opts);
      sample.tn = check_tn(m, k, opts);
    } else {
      Matrix m = s_hadamard_real(p, r);
      CheckOptions opts{CheckMode::floating, tol, false};
      sample.tp = check_tp(m, k, opts);
      sample.tn = check_tn(m, k, opts);
    }
    report.samples.push_back(std::move(sample));
  }
  return report;
}

MeanScanOptions MeanScanOptions::defaults() {
  MeanScanOptions o;
  o.nus = {Rational(0), Rational(3, 10), Rational(1, 2), Rational(1)};
  o.alphas = {ExtendedReal::finite(Rational(1, 2)),  ExtendedReal::finite(Rational(1)),
              ExtendedReal::finite(Rational(3)),     ExtendedReal::finite(Rational(-1, 2)),
              ExtendedReal::finite(Rational(-1)),    ExtendedReal::finite(Rational(-3)),
              ExtendedReal::finite(Rational(0)),     ExtendedReal::plus_infinity(),
              ExtendedReal::minus_infinity()};
  return o;
}

namespace {

bool degenerate_mean(const MeanKind& kind) {
  if (kind.family == MeanKind::Family::heinz_reciprocal) return kind.nu == Rational(1, 2);
  if (kind.family == MeanKind::Family::binomial_reciprocal)
    return !kind.alpha.is_finite() || kind.alpha.value.is_zero();
  return kind.family == MeanKind::Family::min || kind.family == MeanKind::Family::max ||
         kind.family == MeanKind::Family::flat;
}

// The degenerate families are diagonal congruences of the flat matrix
// (heinz 1/2, binomial 0) or min/max matrices; every order-2 minor of
// the flat kind vanishes, and the min/max kinds have the classic zero
// minor at rows {1,2}, cols {2,3}.
MinorSpec structural_zero_minor(const MeanKind& kind) {
  bool flat_like = kind.family == MeanKind::Family::flat ||
                   kind.family == MeanKind::Family::heinz_reciprocal ||
                   (kind.family == MeanKind::Family::binomial_reciprocal &&
                    kind.alpha.is_finite() && kind.alpha.value.is_zero());
  if (flat_like) return MinorSpec({0, 1}, {0, 1});
  return MinorSpec({0, 1}, {1, 2});
}

MeanCheckRow degenerate_row(const MeanKind& kind, const Matrix& m, std::size_t k, double tol) {
  MeanCheckRow row;
  row.kind = kind;
  row.expected_tp = false;
  const std::size_t n = m.rows();

  if (m.kind() == ScalarKind::exact) {
    CheckOptions opts{CheckMode::exact, 0.0, false};
    row.tp = check_tp(m, k, opts);
    row.tn = check_tn(m, k, opts);
    return row;
  }

  row.tn.property = Property::tn;
  row.tn.order = k;
  row.tn.mode = CheckMode::floating;
  row.tn.tol = tol;
  row.tn.outcome = CheckOutcome::holds;
  row.tn.structural = true;

  row.tp.property = Property::tp;
  row.tp.order = k;
  row.tp.mode = CheckMode::floating;
  row.tp.tol = tol;
  row.tp.structural = true;
  if (n >= 3 && k >= 2) {
    row.tp.outcome = CheckOutcome::fails;
    row.tp.witness = structural_zero_minor(kind);
    row.tp.witness_value = "0";
  } else {
    row.tp.outcome = CheckOutcome::indeterminate;
  }
  return row;
}

MeanCheckRow checked_row(const MeanKind& kind, const std::vector<Rational>& lambda,
                         const Exponent& r, std::size_t k, double tol) {
  MeanCheckRow row;
  row.kind = kind;
  Matrix m = mean_matrix(kind, lambda, r);
  if (degenerate_mean(kind)) return degenerate_row(kind, m, k, tol);
  row.expected_tp = true;
  CheckOptions opts;
  opts.mode = m.kind() == ScalarKind::exact ? CheckMode::exact : CheckMode::floating;
  opts.tol = tol;
  row.tp = check_tp(m, k, opts);
  row.tn = check_tn(m, k, opts);
  return row;
}

} // namespace

std::vector<MeanCheckRow> check_mean_matrices(const std::vector<Rational>& lambda, const Exponent& r,
                                              std::size_t k, const MeanScanOptions& opts) {
  require_ordering(lambda, Ordering::strictly_increasing_positive, "lambda");
  if (!(r.as_double() > 0)) throw Error("mean-matrix checks need exponent r > 0");
  if (k < 1 || k > lambda.size())
    throw Error("minor order k must lie in [1, n] for the mean-matrix table");

  std::vector<MeanCheckRow> table;
  table.push_back(checked_row(MeanKind::arithmetic_reciprocal(), lambda, r, k, opts.tol));
  table.push_back(checked_row(MeanKind::harmonic(), lambda, r, k, opts.tol));
  for (const Rational& nu : opts.nus)
    table.push_back(checked_row(MeanKind::heinz_reciprocal(nu), lambda, r, k, opts.tol));
  for (const ExtendedReal& alpha : opts.alphas)
    table.push_back(checked_row(MeanKind::binomial_reciprocal(alpha), lambda, r, k, opts.tol));
  return table;
}

} // namespace tnfactor
