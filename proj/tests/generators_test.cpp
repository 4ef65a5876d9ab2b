#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tnfactor/generators.hpp"
#include "tnfactor/selftest.hpp"

using namespace tnfactor;

namespace {

GridParams sym(std::vector<Rational> nodes,
               Ordering o = Ordering::strictly_increasing_positive) {
  return GridParams::symmetric(std::move(nodes), o);
}

} // namespace

TEST_CASE("s_matrix from the definition") {
  CHECK(s_matrix(sym({Rational(1), Rational(2)})) ==
        Matrix::exact(2, 2, {Rational(2), Rational(3), Rational(3), Rational(5)}));
  CHECK(s_matrix(sym({Rational(1), Rational(2), Rational(3)})) ==
        Matrix::exact(3, 3,
                      {Rational(2), Rational(3), Rational(4), Rational(3), Rational(5), Rational(7),
                       Rational(4), Rational(7), Rational(10)}));
  GridParams degenerate({Rational(0)}, {Rational(5)}, Ordering::strictly_increasing);
  CHECK(s_matrix(degenerate) == Matrix::exact(1, 1, {Rational(1)}));
}

TEST_CASE("s_matrix is symmetric exactly when the grids coincide") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 25; ++t) {
    auto x = random_increasing_nodes(rng, 4);
    auto y = random_increasing_nodes(rng, 4);
    GridParams p(x, y, Ordering::strictly_increasing_positive);
    Matrix s = s_matrix(p);
    CHECK((s == s.transposed()) == (x == y));
  }
}

TEST_CASE("integer Hadamard powers") {
  GridParams p = sym({Rational(1), Rational(2)});
  CHECK(s_hadamard_int(p, 0) == Matrix::exact(2, 2, std::vector<Rational>(4, Rational(1))));
  CHECK(s_hadamard_int(p, 1) == s_matrix(p));
  CHECK(s_hadamard_int(p, 2) ==
        Matrix::exact(2, 2, {Rational(4), Rational(9), Rational(9), Rational(25)}));
}

TEST_CASE("integer Hadamard power equals the m-fold entrywise product") {
  std::mt19937_64 rng(43);
  GridParams p(random_increasing_nodes(rng, 4), random_increasing_nodes(rng, 4),
               Ordering::strictly_increasing_positive);
  Matrix s = s_matrix(p);
  for (unsigned long m : {2ul, 3ul, 4ul}) {
    Matrix power = s_hadamard_int(p, m);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Rational folded(1);
        for (unsigned long rep = 0; rep < m; ++rep) folded *= s.at_exact(i, j);
        CHECK(power.at_exact(i, j) == folded);
      }
  }
}

TEST_CASE("real Hadamard powers are float images") {
  GridParams p = sym({Rational(1), Rational(2)});
  CHECK(s_hadamard_real(p, 1.0) == s_matrix(p).to_floating());
  Matrix half = s_hadamard_real(p, 0.5);
  CHECK(half.at_floating(0, 0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(half.at_floating(1, 1) == doctest::Approx(std::sqrt(5.0)));

  GridParams mixed({Rational(-1)}, {Rational(2)}, Ordering::strictly_increasing);
  CHECK_THROWS_WITH_AS(s_hadamard_real(mixed, 0.5), doctest::Contains("> 0"), Error);
}

TEST_CASE("cauchy matrix and its positivity anchor") {
  CHECK(cauchy_matrix({Rational(1), Rational(2)}, {Rational(1), Rational(2)}) ==
        Matrix::exact(2, 2, {Rational(1, 2), Rational(1, 3), Rational(1, 3), Rational(1, 4)}));
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Rational> lam;
    for (std::size_t i = 1; i <= n; ++i) lam.emplace_back(static_cast<long>(i));
    CHECK(det_exact(cauchy_matrix(lam, lam)).sign() > 0);
  }
  CHECK_THROWS_WITH_AS(cauchy_matrix({Rational(1)}, {Rational(-1)}), doctest::Contains("vanishes"),
                       Error);
}

TEST_CASE("vandermonde matrix with the empty-power convention") {
  CHECK(vandermonde_matrix({Rational(1), Rational(2)}) ==
        Matrix::exact(2, 2, {Rational(1), Rational(1), Rational(1), Rational(2)}));
  CHECK(vandermonde_matrix({Rational(1), Rational(2), Rational(3)}) ==
        Matrix::exact(3, 3,
                      {Rational(1), Rational(1), Rational(1), Rational(1), Rational(2), Rational(4),
                       Rational(1), Rational(3), Rational(9)}));
  CHECK(vandermonde_matrix({Rational(0)}) == Matrix::exact(1, 1, {Rational(1)}));
}

TEST_CASE("mean matrices match their closed forms") {
  CHECK(mean_matrix(MeanKind::harmonic(), {Rational(1), Rational(2)}, Exponent::integer(1)) ==
        Matrix::exact(2, 2, {Rational(1), Rational(4, 3), Rational(4, 3), Rational(2)}));

  Matrix heinz_half =
      mean_matrix(MeanKind::heinz_reciprocal(Rational(1, 2)), {Rational(1), Rational(4)},
                  Exponent::integer(1));
  REQUIRE(heinz_half.kind() == ScalarKind::floating);
  CHECK(heinz_half.at_floating(0, 0) == doctest::Approx(1.0));
  CHECK(heinz_half.at_floating(0, 1) == doctest::Approx(0.5));
  CHECK(heinz_half.at_floating(1, 1) == doctest::Approx(0.25));

  CHECK(mean_matrix(MeanKind::min(), {Rational(1), Rational(2), Rational(3)},
                    Exponent::integer(1)) ==
        Matrix::exact(3, 3,
                      {Rational(1), Rational(1), Rational(1), Rational(1), Rational(2), Rational(2),
                       Rational(1), Rational(2), Rational(3)}));
}

TEST_CASE("exactness dispatch follows the family and the exponent") {
  std::vector<Rational> lam{Rational(1), Rational(2), Rational(3)};
  CHECK(mean_matrix(MeanKind::arithmetic_reciprocal(), lam, Exponent::integer(2)).kind() ==
        ScalarKind::exact);
  CHECK(mean_matrix(MeanKind::arithmetic_reciprocal(), lam, Exponent::real(2.0)).kind() ==
        ScalarKind::floating);
  CHECK(mean_matrix(MeanKind::heinz_reciprocal(Rational(0)), lam, Exponent::integer(1)).kind() ==
        ScalarKind::floating);
  CHECK(mean_matrix(MeanKind::max(), lam, Exponent::integer(2)).kind() == ScalarKind::exact);
}

TEST_CASE("heinz kinds are symmetric about nu = 1/2, bitwise") {
  std::mt19937_64 rng(47);
  auto lam = random_increasing_nodes(rng, 4);
  Matrix a = mean_matrix(MeanKind::heinz_reciprocal(Rational(3, 10)), lam, Exponent::real(1.3));
  Matrix b = mean_matrix(MeanKind::heinz_reciprocal(Rational(7, 10)), lam, Exponent::real(1.3));
  CHECK(a == b);
}

TEST_CASE("heinz at the endpoints degenerates to the arithmetic mean") {
  std::vector<Rational> lam{Rational(1), Rational(2), Rational(5)};
  Matrix h0 = mean_matrix(MeanKind::heinz_reciprocal(Rational(0)), lam, Exponent::real(1.0));
  Matrix ar = mean_matrix(MeanKind::arithmetic_reciprocal(), lam, Exponent::real(1.0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(h0.at_floating(i, j) == doctest::Approx(ar.at_floating(i, j)).epsilon(1e-14));
}

TEST_CASE("the max kind is the index-reversed min matrix on the reciprocal grid") {
  std::vector<Rational> lam{Rational(1), Rational(2), Rational(3), Rational(5)};
  const std::size_t n = lam.size();
  Matrix maxrec = mean_matrix(MeanKind::max(), lam, Exponent::integer(1));
  std::vector<Rational> mu;
  for (std::size_t k = 0; k < n; ++k) mu.push_back(Rational(1) / lam[n - 1 - k]); // increasing
  Matrix minmat = mean_matrix(MeanKind::min(), mu, Exponent::integer(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      CHECK(maxrec.at_exact(i, j) == minmat.at_exact(n - 1 - i, n - 1 - j));
}

TEST_CASE("binomial alpha = -1 reproduces the harmonic mean") {
  std::vector<Rational> lam{Rational(1), Rational(3), Rational(4)};
  Matrix b = mean_matrix(MeanKind::binomial_reciprocal(ExtendedReal::finite(Rational(-1))), lam,
                         Exponent::real(2.0));
  Matrix h = mean_matrix(MeanKind::harmonic(), lam, Exponent::real(2.0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(b.at_floating(i, j) == doctest::Approx(h.at_floating(i, j)).epsilon(1e-13));
}

TEST_CASE("binomial infinities map to the min and max kinds") {
  std::vector<Rational> lam{Rational(1), Rational(2), Rational(4)};
  Matrix minus = mean_matrix(MeanKind::binomial_reciprocal(ExtendedReal::minus_infinity()), lam,
                             Exponent::real(2.0));
  Matrix min_kind = mean_matrix(MeanKind::min(), lam, Exponent::real(2.0));
  CHECK(minus == min_kind);
  Matrix plus = mean_matrix(MeanKind::binomial_reciprocal(ExtendedReal::plus_infinity()), lam,
                            Exponent::real(2.0));
  Matrix max_kind = mean_matrix(MeanKind::max(), lam, Exponent::real(2.0));
  CHECK(plus == max_kind);
}

TEST_CASE("grid validation enforces the declared ordering") {
  CHECK_THROWS_WITH_AS(GridParams::symmetric({Rational(-1), Rational(2)},
                                             Ordering::strictly_increasing_positive),
                       doctest::Contains("positive"), Error);
  CHECK_THROWS_WITH_AS(GridParams::symmetric({Rational(2), Rational(1)},
                                             Ordering::strictly_increasing),
                       doctest::Contains("strictly increasing"), Error);
  CHECK_THROWS_WITH_AS(GridParams::symmetric({Rational(1), Rational(1)}, Ordering::distinct_only),
                       doctest::Contains("repeated"), Error);
  CHECK_THROWS_AS(GridParams({Rational(1)}, {Rational(1), Rational(2)},
                             Ordering::strictly_increasing_positive),
                  Error);
  CHECK_THROWS_AS(mean_matrix(MeanKind::harmonic(), {Rational(2), Rational(1)},
                              Exponent::integer(1)),
                  Error);
  CHECK_THROWS_AS(MeanKind::heinz_reciprocal(Rational(3, 2)), Error);
}
