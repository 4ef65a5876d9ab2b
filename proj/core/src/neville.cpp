#include "tnfactor/neville.hpp"

#include <algorithm>

namespace tnfactor {

namespace {

using Grid2 = std::vector<std::vector<Rational>>;

Grid2 to_grid(const Matrix& a) {
  Grid2 g(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) g[i][j] = a.at_exact(i, j);
  return g;
}

// Eliminates below the diagonal with adjacent-row subtractions,
// recording the inverse elementary factors in product order. Returns
// the breakdown position, if any.
std::optional<PivotBreakdown> eliminate_lower(Grid2& w, std::vector<std::pair<std::size_t, Rational>>* factors) {
  const std::size_t n = w.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = n - 1; i > k; --i) {
      if (w[i][k].is_zero()) continue;
      if (w[i - 1][k].is_zero())
        return PivotBreakdown{i + 1, k + 1,
                              "nonzero entry below a vanished pivot; adjacent-row elimination "
                              "cannot proceed without exchanges"};
      Rational m = w[i][k] / w[i - 1][k];
      for (std::size_t j = k; j < n; ++j) w[i][j] -= m * w[i - 1][j];
      factors->emplace_back(i + 1, std::move(m)); // product order = application order
    }
  }
  return std::nullopt;
}

} // namespace

NevilleOutcome neville_elimination(const Matrix& a) {
  if (!a.is_square()) throw Error("neville elimination requires a square matrix");
  const std::size_t n = a.rows();
  Grid2 w = to_grid(a);

  std::vector<std::pair<std::size_t, Rational>> lower;
  if (auto bad = eliminate_lower(w, &lower)) return *bad;

  // w is now upper triangular; peel the diagonal and reduce the rest to
  // unit upper triangular.
  std::vector<Rational> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = w[i][i];
  Grid2 unit(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (diag[i].is_zero()) {
      for (std::size_t j = i + 1; j < n; ++j)
        if (!w[i][j].is_zero())
          return PivotBreakdown{i + 1, j + 1,
                                "zero diagonal pivot with a nonzero residual row; no bidiagonal "
                                "product can produce this row"};
      unit[i][i] = Rational(1);
    } else {
      for (std::size_t j = i; j < n; ++j) unit[i][j] = w[i][j] / diag[i];
    }
  }

  // Same elimination on the transpose yields the upper factors, in
  // reversed order once transposed back.
  Grid2 unit_t(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) unit_t[i][j] = unit[j][i];
  std::vector<std::pair<std::size_t, Rational>> upper_t;
  if (auto bad = eliminate_lower(unit_t, &upper_t))
    return PivotBreakdown{bad->col, bad->row, bad->reason};

  FactorizationCertificate cert;
  cert.target = CertificateTarget{"generic", n, {}, {}, std::nullopt, a};
  cert.kind = ProductKind::exact;
  for (auto& [idx, s] : lower) cert.factors.emplace_back(ElemLower{idx, std::move(s)});
  cert.factors.emplace_back(DiagFactor{std::move(diag)});
  for (auto it = upper_t.rbegin(); it != upper_t.rend(); ++it)
    cert.factors.emplace_back(ElemUpper{it->first, std::move(it->second)});
  return cert;
}

} // namespace tnfactor
