// Acceptance suite: one check per release criterion, each printed as a
// single pass/fail line with its runtime. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support/naive_linalg.hpp"
#include "tnfactor/factorization.hpp"
#include "tnfactor/positivity.hpp"
#include "tnfactor/psd.hpp"
#include "tnfactor/selftest.hpp"

using namespace tnfactor;

namespace {

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

constexpr std::uint64_t kSeedBase = 0x5eed2026;

std::vector<GridParams> criterion1_grids() {
  std::mt19937_64 rng(kSeedBase + 1);
  std::vector<GridParams> grids;
  grids.reserve(200);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 2 + static_cast<std::size_t>(i % 6); // n in {2..7}
    grids.emplace_back(random_increasing_nodes(rng, n), random_increasing_nodes(rng, n),
                       Ordering::strictly_increasing_positive);
  }
  return grids;
}

CriterionResult criterion1_bidiagonal_reconstruction() {
  std::size_t checked = 0;
  for (const GridParams& p : criterion1_grids()) {
    if (certificate_product(bidiagonal_decomposition_s(p)) != s_matrix(p))
      return {false, "reconstruction mismatch at grid " + std::to_string(checked)};
    ++checked;
  }
  return {true, std::to_string(checked) + " grids reconstructed exactly"};
}

CriterionResult criterion2_hadamard_reconstruction() {
  std::size_t certs = 0;
  std::size_t grid_index = 0;
  for (const GridParams& p : criterion1_grids()) {
    const std::size_t n = p.size();
    for (unsigned long m = 1; m <= n - 1; ++m) {
      FactorizationCertificate cert = hadamard_power_decomposition(p, m);
      if (certificate_product(cert) != s_hadamard_int(p, m))
        return {false, "S^m mismatch at grid " + std::to_string(grid_index) +
                           ", m = " + std::to_string(m)};
      // The binomial diagonal, against GMP's binomials as the oracle.
      const DiagFactor* diag = nullptr;
      for (const Factor& f : cert.factors)
        if (const auto* d = std::get_if<DiagFactor>(&f)) diag = d;
      if (diag == nullptr || diag->d.size() != n) return {false, "missing binomial diagonal"};
      for (std::size_t i = 0; i < n; ++i) {
        Rational expect(0);
        if (i <= m) {
          mpz_class b;
          mpz_bin_uiui(b.get_mpz_t(), m, i);
          expect = Rational(b, 1);
        }
        if (diag->d[i] != expect)
          return {false, "binomial diagonal mismatch at position " + std::to_string(i + 1)};
      }
      ++certs;
    }
    ++grid_index;
  }
  return {true, std::to_string(certs) + " certificates reconstructed with correct diagonals"};
}

CriterionResult criterion3_lu_and_squared_form() {
  std::size_t grid_index = 0;
  for (const GridParams& p : criterion1_grids()) {
    STriangularParts parts = s_triangular_parts(p);
    Matrix s = s_matrix(p);
    if (mat_mul(mat_mul(parts.left_factor, parts.core_diag), parts.right_factor.transposed()) != s)
      return {false, "squared form mismatch at grid " + std::to_string(grid_index)};

    RadicalLu lu = lu_of_s(p);
    Matrix product = mat_mul(lu.lower.to_floating(), lu.upper.to_floating());
    Matrix image = s.to_floating();
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (std::fabs(product.at_floating(i, j) - image.at_floating(i, j)) >
            1e-12 * std::fabs(image.at_floating(i, j)))
          return {false, "float LU image off at grid " + std::to_string(grid_index)};
    ++grid_index;
  }
  return {true, std::to_string(grid_index) + " grids: squared form exact, float LU within 1e-12"};
}

CriterionResult criterion4_corollary_golden_vector() {
  const std::size_t n = 5;
  std::vector<Rational> nodes;
  for (std::size_t i = 1; i <= n; ++i) nodes.emplace_back(static_cast<long>(i));
  GridParams p = GridParams::symmetric(nodes, Ordering::strictly_increasing_positive);
  FactorizationCertificate cert = bidiagonal_decomposition_s(p);

  std::vector<Rational> lower_expect, upper_expect;
  for (std::size_t i = n; i >= 2; --i)
    lower_expect.emplace_back(static_cast<long>(i + 1), static_cast<long>(i)); // 6/5 .. 3/2
  for (std::size_t j = n; j >= 3; --j)
    lower_expect.emplace_back(static_cast<long>(j - 1), static_cast<long>(j)); // 4/5 .. 2/3
  upper_expect.assign(lower_expect.rbegin(), lower_expect.rend());

  std::vector<Rational> lower_got, upper_got;
  std::vector<Rational> diag_got;
  for (const Factor& f : cert.factors) {
    if (const auto* e = std::get_if<ElemLower>(&f)) lower_got.push_back(e->s);
    if (const auto* e = std::get_if<ElemUpper>(&f)) upper_got.push_back(e->s);
    if (const auto* d = std::get_if<DiagFactor>(&f)) diag_got = d->d;
  }
  if (lower_got != lower_expect) return {false, "lower parameters differ from (n+1)/n .. 3/2, (n-1)/n .. 2/3"};
  if (upper_got != upper_expect) return {false, "upper parameters are not the mirrored sequence"};
  if (diag_got != std::vector<Rational>{Rational(2), Rational(1, 2), Rational(0), Rational(0), Rational(0)})
    return {false, "core diagonal is not diag(2, 1/2, 0, 0, 0)"};

  Matrix x_matrix = Matrix::build_exact(n, n, [](std::size_t i, std::size_t j) {
    return Rational(1 + static_cast<long>((i + 1) * (j + 1)));
  });
  if (certificate_product(cert) != x_matrix) return {false, "product differs from [1+ij]"};
  return {true, "parameter vector and product match the closed form"};
}

CriterionResult criterion5_rank_law() {
  std::mt19937_64 rng(kSeedBase + 5);
  std::size_t checked = 0;
  for (int g = 0; g < 50; ++g) {
    std::size_t n = 3 + static_cast<std::size_t>(g % 5); // n in {3..7}
    GridParams p(random_increasing_nodes(rng, n), random_increasing_nodes(rng, n),
                 Ordering::strictly_increasing_positive);
    for (unsigned long m = 0; m <= n - 2; ++m) {
      if (rank_of_hadamard_power(p, m) != m + 1)
        return {false, "rank law fails at grid " + std::to_string(g) + ", m = " + std::to_string(m)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (grid, m) pairs satisfy rank = m+1"};
}

CriterionResult criterion6_threshold_behavior() {
  std::mt19937_64 rng(kSeedBase + 6);
  const double tol = 1e-10;
  const CheckOptions flt{CheckMode::floating, tol, false};
  std::size_t samples = 0;
  for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
    for (int g = 0; g < 20; ++g) {
      GridParams p(separated_increasing_nodes(rng, n), separated_increasing_nodes(rng, n),
                   Ordering::strictly_increasing_positive);
      std::vector<double> tp_exponents{static_cast<double>(n) - 2 + 0.25,
                                       static_cast<double>(n) - 2 + 1};
      for (double r : tp_exponents) {
        PositivityVerdict v = check_tp(s_hadamard_real(p, r), n, flt);
        if (v.outcome != CheckOutcome::holds || v.indeterminate_count != 0)
          return {false, "TP not certified at n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                             ", grid " + std::to_string(g)};
        ++samples;
      }
      std::vector<double> tn_exponents{0.5};
      if (n == 4) tn_exponents.push_back(1.5);
      for (double r : tn_exponents) {
        PositivityVerdict v = check_tn(s_hadamard_real(p, r), n, flt);
        if (v.outcome != CheckOutcome::fails || !v.witness ||
            v.witness_value.empty() || v.witness_value.front() != '-' ||
            v.indeterminate_count != 0)
          return {false, "TN not refuted cleanly at n=" + std::to_string(n) +
                             ", r=" + std::to_string(r) + ", grid " + std::to_string(g)};
        ++samples;
      }
    }
  }
  return {true, std::to_string(samples) + " samples with zero indeterminate minors"};
}

CriterionResult criterion7_psd_boundary() {
  GridParams p = GridParams::symmetric({Rational(1), Rational(2), Rational(3)},
                                       Ordering::strictly_increasing_positive);
  if (is_psd_float(s_hadamard_int(p, 1)) != PsdVerdict::psd) return {false, "r = 1 not PSD"};
  if (is_psd_float(s_hadamard_int(p, 2)) != PsdVerdict::psd) return {false, "r = 2 not PSD"};
  if (is_psd_float(s_hadamard_real(p, 0.5)) != PsdVerdict::not_psd)
    return {false, "r = 0.5 not refuted"};
  return {true, "psd at r in {1,2}, not psd at r = 0.5"};
}

CriterionResult criterion8_mean_matrices() {
  std::vector<Rational> lam{Rational(1), Rational(2), Rational(3), Rational(4)};
  std::size_t rows_checked = 0;
  for (double r : {0.5, 1.0, 2.0, 3.7}) {
    auto table = check_mean_matrices(lam, Exponent::real(r), 4);
    for (const MeanCheckRow& row : table) {
      if (row.expected_tp) {
        if (row.tp.outcome != CheckOutcome::holds)
          return {false, row.kind.describe() + " at r = " + std::to_string(r) + ": TP " +
                             to_string(row.tp.outcome)};
      } else {
        if (row.tn.outcome != CheckOutcome::holds)
          return {false, row.kind.describe() + " at r = " + std::to_string(r) + ": TN " +
                             to_string(row.tn.outcome)};
        if (row.tp.outcome != CheckOutcome::fails)
          return {false, row.kind.describe() + " at r = " + std::to_string(r) + ": TP " +
                             to_string(row.tp.outcome) + " (expected fails)"};
      }
      ++rows_checked;
    }
  }
  return {true, std::to_string(rows_checked) + " family/exponent verdicts as claimed"};
}

CriterionResult criterion9_min_matrix() {
  std::vector<std::vector<Rational>> grids{{Rational(1), Rational(2), Rational(3)}};
  std::mt19937_64 rng(kSeedBase + 9);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  for (int g = 0; g < 20; ++g) grids.push_back(random_increasing_nodes(rng, size(rng)));

  for (std::size_t g = 0; g < grids.size(); ++g) {
    FactorizationCertificate cert = min_matrix_lu(grids[g]);
    Matrix target = cert.target.reconstruct();
    if (certificate_product(cert) != target)
      return {false, "L'U' mismatch at grid " + std::to_string(g)};
    std::size_t k = std::min<std::size_t>(3, grids[g].size());
    if (check_tn(target, k, CheckOptions{CheckMode::exact, 0.0, false}).outcome !=
        CheckOutcome::holds)
      return {false, "TN_3 fails at grid " + std::to_string(g)};
  }
  return {true, std::to_string(grids.size()) + " grids: exact L'U' and exact TN_3"};
}

CriterionResult criterion10_oracle_agreement() {
  std::mt19937_64 rng(kSeedBase + 10);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
  const CheckOptions exact{CheckMode::exact, 0.0, false};

  for (int t = 0; t < 100; ++t) {
    std::size_t n = size(rng);
    Matrix a = [&] {
      if (t % 5 == 4) { // keep some genuinely TP/TN inputs in the mix
        auto lam = random_increasing_nodes(rng, n);
        return cauchy_matrix(lam, lam);
      }
      std::vector<Rational> data;
      for (std::size_t i = 0; i < n * n; ++i) data.emplace_back(num(rng), den(rng));
      return Matrix::exact(n, n, std::move(data));
    }();

    for (bool strict : {true, false}) {
      PositivityVerdict got = strict ? check_tp(a, n, exact) : check_tn(a, n, exact);
      test_support::NaiveVerdict want = test_support::naive_check(a, n, strict);
      bool holds = got.outcome == CheckOutcome::holds;
      if (holds != want.holds) return {false, "verdict disagreement at trial " + std::to_string(t)};
      if (!want.holds) {
        if (!got.witness || got.witness->rows != want.witness_rows ||
            got.witness->cols != want.witness_cols || got.witness_value != want.witness_value.str())
          return {false, "witness disagreement at trial " + std::to_string(t)};
      }
    }
  }
  return {true, "200 verdicts (tp and tn over 100 matrices) agree with the naive enumerator"};
}

CriterionResult criterion11_factor_nonnegativity() {
  std::size_t factors_checked = 0;
  std::size_t grid_index = 0;
  for (const GridParams& p : criterion1_grids()) {
    FactorizationCertificate bidiag = bidiagonal_decomposition_s(p);
    for (const Factor& f : bidiag.factors) {
      if (!factor_entries_nonnegative(f))
        return {false, "negative S-certificate parameter at grid " + std::to_string(grid_index)};
      ++factors_checked;
    }
    for (unsigned long m = 1; m <= p.size() - 1; ++m)
      for (const Factor& f : hadamard_power_decomposition(p, m).factors) {
        if (!factor_entries_nonnegative(f))
          return {false, "negative Hadamard-certificate entry at grid " + std::to_string(grid_index)};
        ++factors_checked;
      }
    ++grid_index;
  }
  return {true, std::to_string(factors_checked) + " factors, all entrywise nonnegative"};
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds; // 0 = no stated limit
  std::function<CriterionResult()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact reconstruction of the S bidiagonal certificates", 10, criterion1_bidiagonal_reconstruction},
      {2, "exact reconstruction of the Hadamard power certificates", 30, criterion2_hadamard_reconstruction},
      {3, "radical LU: exact squared form and 1e-12 float image", 0, criterion3_lu_and_squared_form},
      {4, "consecutive-integer golden certificate", 0, criterion4_corollary_golden_vector},
      {5, "rank law rank(S^m) = m+1", 20, criterion5_rank_law},
      {6, "float TP/TN threshold behavior around n-2", 30, criterion6_threshold_behavior},
      {7, "PSD boundary for [1 + x_i x_j]", 1, criterion7_psd_boundary},
      {8, "mean-matrix TP/TN table", 30, criterion8_mean_matrices},
      {9, "min-matrix LU and exact TN", 5, criterion9_min_matrix},
      {10, "optimized enumerator vs naive oracle", 20, criterion10_oracle_agreement},
      {11, "factor nonnegativity across certificates", 0, criterion11_factor_nonnegativity},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.pass && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      result.pass = false;
      result.detail += " (exceeded " + std::to_string(c.limit_seconds) + " s limit)";
    }
    if (!result.pass) ++failures;
    std::printf("criterion %2d [%s] %s (%.2f s) - %s\n", c.number, result.pass ? "PASS" : "FAIL",
                c.name, seconds, result.detail.c_str());
  }
  if (failures == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures;
}
