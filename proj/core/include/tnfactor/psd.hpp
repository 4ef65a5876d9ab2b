#pragma once

#include "tnfactor/matrix.hpp"

namespace tnfactor {

enum class PsdVerdict { psd, not_psd, indeterminate };

std::string to_string(PsdVerdict v);

/// Positive-semidefiniteness test through the symmetric eigenvalue
/// spectrum. Verdict is psd when every eigenvalue is >= -tol * scale
/// and not_psd when one falls below, with scale the largest eigenvalue
/// magnitude; indeterminate is reserved for solver failure. Requires a
/// square matrix, symmetric within tol relative to its largest entry;
/// exact and radical inputs are checked through their float images.
PsdVerdict is_psd_float(const Matrix& a, double tol = 1e-10);

} // namespace tnfactor
