#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tnfactor/neville.hpp"
#include "tnfactor/selftest.hpp"

using namespace tnfactor;

namespace {

FactorizationCertificate expect_certificate(NevilleOutcome outcome) {
  REQUIRE(std::holds_alternative<FactorizationCertificate>(outcome));
  return std::get<FactorizationCertificate>(std::move(outcome));
}

} // namespace

TEST_CASE("elimination of the 2x2 S matrix recovers the classic factors") {
  Matrix s = Matrix::exact(2, 2, {Rational(2), Rational(3), Rational(3), Rational(5)});
  const auto cert = expect_certificate(neville_elimination(s));
  REQUIRE(cert.factors.size() == 3);
  CHECK(std::get<ElemLower>(cert.factors[0]).s == Rational(3, 2));
  CHECK(std::get<DiagFactor>(cert.factors[1]).d ==
        std::vector<Rational>{Rational(2), Rational(1, 2)});
  CHECK(std::get<ElemUpper>(cert.factors[2]).s == Rational(3, 2));
  CHECK(certificate_product(cert) == s);
}

TEST_CASE("the identity eliminates to a bare diagonal") {
  const auto cert = expect_certificate(neville_elimination(Matrix::identity(3)));
  REQUIRE(cert.factors.size() == 1);
  CHECK(std::get<DiagFactor>(cert.factors[0]).d == std::vector<Rational>(3, Rational(1)));
}

TEST_CASE("breakdowns are reported with their position") {
  Matrix swap = Matrix::exact(2, 2, {Rational(0), Rational(1), Rational(1), Rational(0)});
  NevilleOutcome outcome = neville_elimination(swap);
  REQUIRE(std::holds_alternative<PivotBreakdown>(outcome));
  const auto& b = std::get<PivotBreakdown>(outcome);
  CHECK(b.row == 2);
  CHECK(b.col == 1);

  Matrix nilpotent = Matrix::exact(2, 2, {Rational(0), Rational(1), Rational(0), Rational(0)});
  NevilleOutcome outcome2 = neville_elimination(nilpotent);
  REQUIRE(std::holds_alternative<PivotBreakdown>(outcome2));
}

TEST_CASE("products of nonnegative bidiagonal factors eliminate without breakdown") {
  std::mt19937_64 rng(79);
  std::uniform_int_distribution<long> num(0, 4), den(1, 3);
  std::uniform_int_distribution<std::size_t> size(2, 5);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = size(rng);
    // Random TN-style product: lowers, a positive diagonal, uppers.
    Matrix a = Matrix::identity(n);
    for (std::size_t i = 2; i <= n; ++i)
      a = mat_mul(a, materialize(ElemLower{i, Rational(num(rng), den(rng))}, n));
    std::vector<Rational> d;
    for (std::size_t i = 0; i < n; ++i) d.emplace_back(num(rng) + 1, den(rng));
    a = mat_mul(a, materialize(DiagFactor{d}, n));
    for (std::size_t i = 2; i <= n; ++i)
      a = mat_mul(a, materialize(ElemUpper{i, Rational(num(rng), den(rng))}, n));

    const auto cert = expect_certificate(neville_elimination(a));
    CHECK(certificate_product(cert) == a);
  }
}

TEST_CASE("elimination of S succeeds despite the rank deficiency") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 20; ++t) {
    std::uniform_int_distribution<std::size_t> size(2, 6);
    std::size_t n = size(rng);
    GridParams p(random_increasing_nodes(rng, n), random_increasing_nodes(rng, n),
                 Ordering::strictly_increasing_positive);
    Matrix s = s_matrix(p);
    const auto cert = expect_certificate(neville_elimination(s));
    CHECK(certificate_product(cert) == s);
  }
}

TEST_CASE("non-square inputs are rejected") {
  CHECK_THROWS_AS(neville_elimination(Matrix::exact(1, 2, {Rational(1), Rational(2)})), Error);
}
