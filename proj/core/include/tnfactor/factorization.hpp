#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tnfactor/generators.hpp"
#include "tnfactor/grid.hpp"
#include "tnfactor/matrix.hpp"

namespace tnfactor {

// ---------------------------------------------------------------------------
// Factors
// ---------------------------------------------------------------------------

/// Identity except entry (i, i-1) = s, with 1-based i in [2, n].
struct ElemLower {
  std::size_t index;
  Rational s;
};

/// Identity except entry (i-1, i) = s, with 1-based i in [2, n].
struct ElemUpper {
  std::size_t index;
  Rational s;
};

struct DiagFactor {
  std::vector<Rational> d;
};

/// Lower bidiagonal with explicit diagonal (length n) and subdiagonal
/// (length n-1) value lists.
struct LowerBidiagonal {
  std::vector<Rational> diag, sub;
};

struct UpperBidiagonal {
  std::vector<Rational> diag, super;
};

/// Full matrix payload for factors that are triangular but not
/// bidiagonal (the min-matrix L'/U' pair and the radical display LU).
struct DenseFactor {
  Matrix matrix;
};

using Factor = std::variant<ElemLower, ElemUpper, DiagFactor, LowerBidiagonal, UpperBidiagonal, DenseFactor>;

/// Factor as a dense n x n matrix.
Matrix materialize(const Factor& f, std::size_t n);

/// True when every scalar carried by the factor is >= 0 (dense radical
/// factors check coefficient signs; their radicands are nonnegative by
/// construction).
bool factor_entries_nonnegative(const Factor& f);

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

enum class ProductKind { exact, radical_display };

/// What the ordered factor product claims to equal. For grid families
/// the target matrix is reconstructed from the stored parameters; the
/// generic family embeds the matrix itself.
struct CertificateTarget {
  std::string family; // "S" | "S-pow" | "vandermonde" | "min" | "generic"
  std::size_t n = 0;
  std::vector<Rational> x, y;
  std::optional<unsigned long> hadamard_m;
  std::optional<Matrix> matrix;

  /// Rebuilds the claimed target matrix (exact kind).
  Matrix reconstruct() const;
};

/// Ordered factor list whose left-to-right product is claimed to equal
/// the target. The order is exactly the order in which the factors are
/// multiplied; it is never normalized.
struct FactorizationCertificate {
  CertificateTarget target;
  ProductKind kind = ProductKind::exact;
  std::vector<Factor> factors;
};

/// Multiplies the factors in order (identity for an empty list).
Matrix certificate_product(const FactorizationCertificate& cert);

struct VerificationReport {
  enum class Status { exact_equal, float_equal, mismatch };
  Status status = Status::mismatch;
  std::string detail;
  // First differing entry for mismatches (1-based).
  std::optional<std::pair<std::size_t, std::size_t>> mismatch_at;
  std::string got, want;
  // Float comparison path.
  double max_abs_deviation = 0.0;
  double max_rel_deviation = 0.0;
  // Radical display path: the exact cross-check through the squared
  // (triangular-parts) form.
  std::optional<bool> squared_form_exact;
};

std::string to_string(VerificationReport::Status s);

/// Materializes the certificate, multiplies in order and compares with
/// the target: exact entrywise equality for exact certificates against
/// exact targets, float image comparison (1e-12 relative) otherwise.
/// Radical display certificates additionally re-derive the exact
/// squared form from the stored grid. Mismatch is a report, not an
/// error.
VerificationReport verify_certificate(const FactorizationCertificate& cert, const Matrix& target);

// ---------------------------------------------------------------------------
// Explicit decompositions
// ---------------------------------------------------------------------------

/// The two-column lower / two-row upper triangular pair with radical
/// entries whose product is [1 + x_i y_j] exactly. Requires n >= 2,
/// 1 + x_1 y_1 > 0 and x_2 != x_1, y_2 != y_1; grids additionally need
/// (x_2 - x_1)(y_2 - y_1) > 0 so the radicands are nonnegative.
struct RadicalLu {
  Matrix lower, upper;
};
RadicalLu lu_of_s(const GridParams& p);

/// The same pair packaged as a radical-display certificate, verifiable
/// through verify_certificate (float product + exact squared form).
FactorizationCertificate lu_display_certificate(const GridParams& p);

/// Elementary-bidiagonal certificate
///   [L_n(a_n)..L_2(a_2)] [L_n(b_n)..L_3(b_3)] D [U_3(b'_3)..U_n(b'_n)] [U_2(a'_2)..U_n(a'_n)]
/// for [1 + x_i y_j]. Validity needs 1 + x_1 y_j != 0, 1 + x_i y_1 != 0
/// and consecutive nodes distinct in each grid (checked; the violated
/// condition is named with its index). n >= 2.
FactorizationCertificate bidiagonal_decomposition_s(const GridParams& p);

/// Closed-form triangular intermediates behind the S decomposition:
/// cumulative alpha and beta products per grid, the combined triangular
/// factors and the rank-2 core diagonal, satisfying
///   alpha_lower_x * beta_lower_x = left_factor,
///   alpha_lower_y * beta_lower_y = right_factor,
///   left_factor * core_diag * right_factor^T = S      (all exact).
struct STriangularParts {
  Matrix alpha_lower_x, alpha_lower_y;
  Matrix beta_lower_x, beta_lower_y;
  Matrix left_factor, right_factor;
  Matrix core_diag;
};
STriangularParts s_triangular_parts(const GridParams& p);

/// Bidiagonal certificate for the Vandermonde matrix [x_i^(j-1)]:
/// n-1 unit lower bidiagonal factors followed by n-1 upper bidiagonal
/// factors. Empty for n = 1. Requires distinct nodes.
FactorizationCertificate vandermonde_bidiagonal(const std::vector<Rational>& x);

/// Certificate for the integer Hadamard power [ (1+x_i y_j)^m ],
/// 1 <= m <= n-1: the Vandermonde factors of x, the binomial diagonal
/// diag(1, C(m,1), ..., C(m,m-1), 1, 0...), then the transposed
/// Vandermonde factors of y. Requires distinct grids, n >= 2.
FactorizationCertificate hadamard_power_decomposition(const GridParams& p, unsigned long m);

/// Exact LU certificate for [min(mu_i, mu_j)] on 0 < mu_1 < ... < mu_n:
/// dense lower factor (column 1 constant mu_1, column j >= 2 constant
/// mu_j - mu_{j-1} from the diagonal down) times the all-ones upper
/// triangle.
FactorizationCertificate min_matrix_lu(const std::vector<Rational>& mu);

} // namespace tnfactor
