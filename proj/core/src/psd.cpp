#include "tnfactor/psd.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace tnfactor {

std::string to_string(PsdVerdict v) {
  switch (v) {
    case PsdVerdict::psd: return "psd";
    case PsdVerdict::not_psd: return "not-psd";
    case PsdVerdict::indeterminate: return "indeterminate";
  }
  return "?";
}

PsdVerdict is_psd_float(const Matrix& a, double tol) {
  if (!a.is_square()) throw Error("psd test requires a square matrix");
  const Matrix fl = a.kind() == ScalarKind::floating ? a : a.to_floating();
  const std::size_t n = fl.rows();

  double max_abs = 0;
  for (double v : fl.floating_data()) max_abs = std::max(max_abs, std::fabs(v));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::fabs(fl.at_floating(i, j) - fl.at_floating(j, i)) > tol * std::max(1.0, max_abs))
        throw Error("psd test requires a symmetric matrix (asymmetry beyond tolerance at entry " +
                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");

  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          0.5 * (fl.at_floating(i, j) + fl.at_floating(j, i));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) return PsdVerdict::indeterminate;

  const auto& ev = solver.eigenvalues();
  double scale = std::max(std::fabs(ev(0)), std::fabs(ev(ev.size() - 1)));
  return ev(0) >= -tol * scale ? PsdVerdict::psd : PsdVerdict::not_psd;
}

} // namespace tnfactor
