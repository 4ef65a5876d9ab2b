#pragma once

#include <variant>

#include "tnfactor/factorization.hpp"

namespace tnfactor {

/// Where and why adjacent-row elimination got stuck. Positions are
/// 1-based.
struct PivotBreakdown {
  std::size_t row = 0, col = 0;
  std::string reason;
};

using NevilleOutcome = std::variant<FactorizationCertificate, PivotBreakdown>;

/// Classical Neville elimination of an exact square matrix: only
/// adjacent-row (then adjacent-column) operations, no exchanges. On
/// success the certificate is elementary lower factors, a diagonal and
/// elementary upper factors whose ordered product reconstructs the
/// input exactly; zero multipliers are omitted. Breakdown (a nonzero
/// entry sitting under a zero pivot, or a zero diagonal with a nonzero
/// residual row) is reported, not thrown.
NevilleOutcome neville_elimination(const Matrix& a);

} // namespace tnfactor
