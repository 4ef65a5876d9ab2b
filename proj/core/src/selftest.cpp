#include "tnfactor/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "tnfactor/factorization.hpp"
#include "tnfactor/neville.hpp"
#include "tnfactor/positivity.hpp"

namespace tnfactor {

std::vector<Rational> random_increasing_nodes(std::mt19937_64& rng, std::size_t n, long max_num,
                                              long max_den) {
  std::uniform_int_distribution<long> num(1, max_num), den(1, max_den);
  std::set<Rational> nodes;
  while (nodes.size() < n) nodes.insert(Rational(num(rng), den(rng)));
  return {nodes.begin(), nodes.end()};
}

std::vector<Rational> separated_increasing_nodes(std::mt19937_64& rng, std::size_t n) {
  // Small starting values with generous gaps keep the top-order minors
  // of the Hadamard-power families far from the float sign tolerance:
  // large nodes make [1 + x_i y_j] multiplicatively near rank one and
  // shrink the relative determinants.
  std::uniform_int_distribution<long> start_num(4, 8), gap_num(12, 16);
  std::vector<Rational> nodes;
  nodes.reserve(n);
  nodes.push_back(Rational(start_num(rng), 16)); // in [1/4, 1/2]
  for (std::size_t i = 1; i < n; ++i)
    nodes.push_back(nodes.back() + Rational(gap_num(rng), 16)); // gaps in [3/4, 1]
  return nodes;
}

namespace {

struct Battery {
  std::mt19937_64 rng;
  std::size_t trials;
  std::vector<SelftestCheck> checks;

  template <class Fn>
  void run(const std::string& name, std::size_t count, Fn&& trial) {
    SelftestCheck check;
    check.name = name;
    check.trials = count;
    for (std::size_t t = 0; t < count; ++t) {
      std::string why;
      bool ok = false;
      try {
        ok = trial(t, &why);
      } catch (const std::exception& e) {
        why = e.what();
      }
      if (!ok) {
        ++check.failures;
        if (check.first_failure.empty())
          check.first_failure = "trial " + std::to_string(t) + ": " + why;
      }
    }
    checks.push_back(std::move(check));
  }

  GridParams random_grid(std::size_t min_n = 2, std::size_t max_n = 7) {
    std::uniform_int_distribution<std::size_t> size(min_n, max_n);
    std::size_t n = size(rng);
    return GridParams(random_increasing_nodes(rng, n), random_increasing_nodes(rng, n),
                      Ordering::strictly_increasing_positive);
  }
};

bool float_images_close(const Matrix& a, const Matrix& b, double rel_tol, std::string* why) {
  Matrix fa = a.to_floating(), fb = b.to_floating();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      double x = fa.at_floating(i, j), y = fb.at_floating(i, j);
      if (std::fabs(x - y) > rel_tol * std::max({1.0, std::fabs(x), std::fabs(y)})) {
        *why = "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") deviate";
        return false;
      }
    }
  return true;
}

} // namespace

SelftestReport run_selftest(const SelftestOptions& opts) {
  Battery b{std::mt19937_64(opts.seed), opts.trials, {}};

  b.run("rational-field-laws", opts.trials, [&](std::size_t, std::string* why) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 40);
    auto rnd = [&] { return Rational(num(b.rng), den(b.rng)); };
    Rational x = rnd(), y = rnd(), z = rnd();
    if ((x + y) + z != x + (y + z)) { *why = "associativity"; return false; }
    if (x * (y + z) != x * y + x * z) { *why = "distributivity"; return false; }
    if (!x.is_zero() && (y / x) * x != y) { *why = "division"; return false; }
    return true;
  });

  b.run("radical-product-closure", opts.trials, [&](std::size_t, std::string* why) {
    std::uniform_int_distribution<long> num(1, 30), den(1, 30);
    Rational d(num(b.rng), den(b.rng));
    Radical u(Rational(num(b.rng), den(b.rng)), d), v(Rational(num(b.rng), den(b.rng)), d);
    RadicalProduct prod = radical_mul(u, v);
    if (!std::holds_alternative<Rational>(prod)) { *why = "equal radicands must resolve"; return false; }
    Rational expect = u.coefficient() * v.coefficient() * u.radicand();
    if (std::get<Rational>(prod) != expect) { *why = "wrong resolved value"; return false; }
    return true;
  });

  b.run("s-bidiagonal-reconstruction", opts.trials, [&](std::size_t, std::string* why) {
    GridParams p = b.random_grid();
    auto cert = bidiagonal_decomposition_s(p);
    if (certificate_product(cert) != s_matrix(p)) { *why = "product differs from S"; return false; }
    return true;
  });

  b.run("s-factor-nonnegativity", opts.trials, [&](std::size_t, std::string* why) {
    GridParams p = b.random_grid();
    for (const Factor& f : bidiagonal_decomposition_s(p).factors)
      if (!factor_entries_nonnegative(f)) { *why = "negative factor parameter"; return false; }
    return true;
  });

  b.run("triangular-parts-identities", opts.trials, [&](std::size_t, std::string* why) {
    GridParams p = b.random_grid();
    STriangularParts parts = s_triangular_parts(p);
    if (mat_mul(parts.alpha_lower_x, parts.beta_lower_x) != parts.left_factor) {
      *why = "alpha*beta != left factor";
      return false;
    }
    if (mat_mul(parts.alpha_lower_y, parts.beta_lower_y) != parts.right_factor) {
      *why = "alpha*beta != right factor";
      return false;
    }
    Matrix s = mat_mul(mat_mul(parts.left_factor, parts.core_diag), parts.right_factor.transposed());
    if (s != s_matrix(p)) { *why = "squared form differs from S"; return false; }
    return true;
  });

  b.run("radical-lu-cross-check", opts.trials, [&](std::size_t, std::string* why) {
    GridParams p = b.random_grid();
    RadicalLu lu = lu_of_s(p);
    Matrix product = mat_mul(lu.lower, lu.upper);
    if (product.kind() != ScalarKind::exact) { *why = "radical product did not resolve"; return false; }
    if (product != s_matrix(p)) { *why = "L*U differs from S"; return false; }
    return float_images_close(mat_mul(lu.lower.to_floating(), lu.upper.to_floating()), s_matrix(p),
                              1e-12, why);
  });

  b.run("hadamard-power-reconstruction", opts.trials, [&](std::size_t, std::string* why) {
    GridParams p = b.random_grid(2, 6);
    for (unsigned long m = 1; m + 1 <= p.size(); ++m) {
      auto cert = hadamard_power_decomposition(p, m);
      if (certificate_product(cert) != s_hadamard_int(p, m)) {
        *why = "product differs from S^m at m = " + std::to_string(m);
        return false;
      }
      for (const Factor& f : cert.factors)
        if (!factor_entries_nonnegative(f)) { *why = "negative factor entry"; return false; }
    }
    return true;
  });

  b.run("vandermonde-reconstruction", opts.trials, [&](std::size_t, std::string* why) {
    GridParams p = b.random_grid(1, 7);
    auto cert = vandermonde_bidiagonal(p.x);
    if (certificate_product(cert) != vandermonde_matrix(p.x)) { *why = "product differs"; return false; }
    for (const Factor& f : cert.factors)
      if (!factor_entries_nonnegative(f)) { *why = "negative factor entry"; return false; }
    return true;
  });

  b.run("min-matrix-lu", opts.trials, [&](std::size_t, std::string* why) {
    GridParams p = b.random_grid(1, 7);
    auto cert = min_matrix_lu(p.x);
    if (certificate_product(cert) != cert.target.reconstruct()) { *why = "product differs"; return false; }
    CheckOptions exact_opts{CheckMode::exact, 0.0, false};
    auto tn = check_tn(cert.target.reconstruct(), std::min<std::size_t>(3, p.size()), exact_opts);
    if (tn.outcome != CheckOutcome::holds) { *why = "min matrix not TN"; return false; }
    return true;
  });

  b.run("generic-neville-on-s", opts.trials, [&](std::size_t, std::string* why) {
    GridParams p = b.random_grid(2, 6);
    NevilleOutcome outcome = neville_elimination(s_matrix(p));
    if (std::holds_alternative<PivotBreakdown>(outcome)) {
      *why = "unexpected breakdown: " + std::get<PivotBreakdown>(outcome).reason;
      return false;
    }
    const auto& cert = std::get<FactorizationCertificate>(outcome);
    if (certificate_product(cert) != s_matrix(p)) { *why = "product differs"; return false; }
    return true;
  });

  b.run("hadamard-rank-law", opts.trials, [&](std::size_t, std::string* why) {
    GridParams p = b.random_grid(3, 7);
    for (unsigned long m = 0; m + 2 <= p.size(); ++m)
      if (rank_of_hadamard_power(p, m) != m + 1) {
        *why = "rank != m+1 at m = " + std::to_string(m);
        return false;
      }
    return true;
  });

  SelftestReport report;
  report.seed = opts.seed;
  report.trials_per_check = opts.trials;
  report.checks = std::move(b.checks);
  report.all_passed = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const SelftestCheck& c) { return c.failures == 0; });
  return report;
}

} // namespace tnfactor
