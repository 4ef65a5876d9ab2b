#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tnfactor/generators.hpp"
#include "tnfactor/matrix.hpp"

namespace tnfactor {

enum class Property { tp, tn };
enum class CheckMode { exact, floating };
enum class CheckOutcome { holds, fails, indeterminate };

std::string to_string(Property p);
std::string to_string(CheckMode m);
std::string to_string(CheckOutcome o);

struct CheckOptions {
  CheckMode mode = CheckMode::exact;
  double tol = 1e-10; // floating mode only
  // Full enumeration costs sum_k C(n,k)^2 determinants; by default
  // matrices beyond 10x10 are rejected rather than silently slow.
  bool allow_large = false;
};

/// Verdict of a TP_k / TN_k check. A fails outcome always carries the
/// violating minor. In floating mode a minor m of a submatrix with
/// Hadamard scale s (product of row sup-norms) counts as positive when
/// m > tol*s and negative when m < -tol*s; minors inside the band are
/// neither, they are tallied in indeterminate_count (first one
/// recorded) and never decide the verdict either way. Minors of
/// submatrices with a zero row are exactly zero and classified as such.
/// Enumeration runs by increasing order, then lexicographic row and
/// column sets; evaluation stops at the first decisive violation.
struct PositivityVerdict {
  Property property = Property::tp;
  std::size_t order = 0; // k
  CheckOutcome outcome = CheckOutcome::holds;
  CheckMode mode = CheckMode::exact;
  double tol = 0.0;
  std::optional<MinorSpec> witness;
  std::string witness_value;
  std::size_t minors_evaluated = 0;
  std::size_t indeterminate_count = 0;
  std::optional<MinorSpec> first_indeterminate;
  // Verdict derived from family structure instead of enumeration (only
  // produced by the mean-matrix table for the degenerate families).
  bool structural = false;
};

/// TP_k: every minor of order 1..k positive.
PositivityVerdict check_tp(const Matrix& a, std::size_t k, const CheckOptions& opts);
/// TN_k: every minor of order 1..k nonnegative.
PositivityVerdict check_tn(const Matrix& a, std::size_t k, const CheckOptions& opts);

/// Exact rank of [ (1+x_i y_j)^m ] for 0 <= m <= n-2 on strictly
/// increasing grids; the rank law predicts m+1.
std::size_t rank_of_hadamard_power(const GridParams& p, unsigned long m);

/// One scanned exponent: integral exponents are dispatched to exact
/// arithmetic on the exact integer power (a float sign test cannot
/// certify the vanishing minors at integer exponents), non-integral
/// ones to the float check on the entrywise real power.
struct ThresholdSample {
  double r = 0;
  bool exact_arithmetic = false;
  PositivityVerdict tp, tn;
};

struct ThresholdScanReport {
  std::vector<Rational> x, y;
  std::size_t order = 0;        // k used for the checks
  double tol = 0;
  std::size_t claimed_boundary = 0; // n - 2
  std::vector<ThresholdSample> samples; // sorted by exponent
};

ThresholdScanReport scan_hadamard_threshold(const GridParams& p, std::vector<double> exponents,
                                            std::size_t k, double tol = 1e-10);

/// One row of the mean-matrix table.
struct MeanCheckRow {
  MeanKind kind;
  bool expected_tp = true; // false: expected TN but not TP
  PositivityVerdict tp, tn;
};

struct MeanScanOptions {
  std::vector<Rational> nus;         // heinz parameters to scan
  std::vector<ExtendedReal> alphas;  // binomial parameters to scan
  double tol = 1e-10;
  static MeanScanOptions defaults();
};

/// Verdict table over the mean-matrix families on a strictly increasing
/// positive grid, r > 0. The degenerate families (heinz nu = 1/2,
/// binomial alpha in {0, +inf, -inf}) are certified structurally: they
/// are congruence-scaled flat or min/max matrices, totally nonnegative
/// with vanishing order-2 minors, so TN holds and TP fails with a
/// concrete zero minor whenever n >= 3 (for n <= 2 the TP side is
/// reported indeterminate rather than claimed).
std::vector<MeanCheckRow> check_mean_matrices(const std::vector<Rational>& lambda, const Exponent& r,
                                              std::size_t k,
                                              const MeanScanOptions& opts = MeanScanOptions::defaults());

} // namespace tnfactor
