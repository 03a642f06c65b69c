#include <cmath>
#include <numbers>
#include <random>

#include "compnorm/character.h"
#include "compnorm/dirichlet_poly.h"
#include "compnorm/errors.h"
#include "doctest.h"
#include "oracles.h"

using namespace compnorm;

TEST_CASE("h2_norm_sq of small polynomials") {
  CHECK(h2_norm_sq(DirichletPoly{}) == 0.0);
  CHECK(h2_norm_sq(DirichletPoly{{2, 1.0}, {3, 1.0}}) == 2.0);
  CHECK(h2_norm_sq(DirichletPoly{{2, 3.0}, {3, 4.0}}) == 25.0);
}

TEST_CASE("canonical form drops zeros and rejects index 0") {
  DirichletPoly f{{2, 1.0}, {3, 0.0}};
  CHECK(f.support_size() == 1);
  DirichletPoly g{{2, 1.0}, {5, 1e-17}};
  CHECK(g == DirichletPoly::monomial(2));
  CHECK_THROWS_AS(DirichletPoly({{0, 1.0}}), PreconditionError);
}

TEST_CASE("multiply") {
  CHECK(multiply(DirichletPoly::monomial(2), DirichletPoly::monomial(3)) ==
        DirichletPoly::monomial(6));
  const DirichletPoly f{{2, 1.0}, {3, 1.0}};
  CHECK(multiply(f, f) == DirichletPoly{{4, 1.0}, {6, 2.0}, {9, 1.0}});
  CHECK(multiply(f, DirichletPoly::constant(1.0)) == f);
}

TEST_CASE("multiply agrees with schoolbook convolution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = oracle::random_poly(rng, 6);
    const auto g = oracle::random_poly(rng, 5);
    const auto expected = oracle::convolve(f.coeffs(), g.coeffs());
    const auto got = multiply(f, g);
    CHECK(got.support_size() == expected.size());
    for (const auto& [n, v] : expected) {
      CHECK(std::abs(got.coeff(n) - v) < 1e-13);
    }
  }
}

TEST_CASE("evaluate") {
  CHECK(evaluate(DirichletPoly::monomial(2), 1.0).real() == doctest::Approx(0.5));
  CHECK(evaluate(DirichletPoly{{1, 1.0}, {2, 1.0}}, 0.0) == cplx(2.0));
  const double t = 2.0 * std::numbers::pi / std::log(2.0);
  const cplx s(0.0, t);
  const cplx expected = 1.0 + std::exp(-s * std::log(3.0));
  CHECK(std::abs(evaluate(DirichletPoly{{2, 1.0}, {3, 1.0}}, s) - expected) <
        1e-12);
}

TEST_CASE("derivative_at") {
  CHECK(derivative_at(DirichletPoly::constant(1.0), 1, cplx(0.3, 2.0)) == cplx(0.0));
  CHECK(derivative_at(DirichletPoly::monomial(2), 1, 2.0).real() ==
        doctest::Approx(-std::log(2.0) / 4.0));
  CHECK(derivative_at(DirichletPoly{{1, 1.0}, {2, 1.0}, {3, 1.0}}, 0, 2.0).real() ==
        doctest::Approx(49.0 / 36.0));
}

TEST_CASE("twist") {
  const auto minus = Character({-1.0});
  CHECK(twist(DirichletPoly::monomial(2), minus) == DirichletPoly::monomial(2, -1.0));
  const auto ii = Character({cplx(0, 1), cplx(0, 1)});
  const auto t = twist(DirichletPoly::monomial(6), ii);
  CHECK(std::abs(t.coeff(6) + 1.0) < 1e-15);
  const DirichletPoly f{{1, 0.5}, {4, cplx(1, 2)}, {15, -3.0}};
  CHECK(twist(f, Character::trivial(3)) == f);
  CHECK_THROWS_AS(twist(DirichletPoly::monomial(7), Character::trivial(3)), DomainError);
  CHECK_THROWS_AS(Character({cplx(1.0, 0.1)}), DomainError);
}

TEST_CASE("character is completely multiplicative") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 20; ++trial) {
    const auto chi = Character::from_angles({angle(rng), angle(rng), angle(rng)});
    CHECK(chi(1) == cplx(1.0));
    for (std::uint64_t m : {2, 6, 9, 20, 45}) {
      for (std::uint64_t n : {3, 4, 10, 25}) {
        CHECK(std::abs(chi(m * n) - chi(m) * chi(n)) < 1e-13);
      }
    }
  }
}

TEST_CASE("isometries: dilation and twist") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = oracle::random_poly(rng, 8);
    const double norm = h2_norm_sq(f);
    for (std::uint64_t n0 : {1, 2, 7, 30}) {
      CHECK(h2_norm_sq(multiply(DirichletPoly::monomial(n0), f)) ==
            doctest::Approx(norm).epsilon(1e-14));
    }
    const auto chi = Character::from_angles(
        {angle(rng), angle(rng), angle(rng), angle(rng)});
    CHECK(h2_norm_sq(twist(f, chi)) == doctest::Approx(norm).epsilon(1e-14));
    const auto g = oracle::random_poly(rng, 5);
    const double lhs = h2_norm_sq(f + g);
    const double rhs = std::pow(std::sqrt(norm) + std::sqrt(h2_norm_sq(g)), 2);
    CHECK(lhs <= rhs + 1e-12);
    CHECK((h2_norm_sq(f) == 0.0) == f.is_zero());
  }
}

TEST_CASE("carlson_mean") {
  CHECK(carlson_mean(DirichletPoly::constant(1.0), 3.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(carlson_mean(DirichletPoly::monomial(2), 17.0) == doctest::Approx(1.0).epsilon(1e-14));
  const DirichletPoly f{{2, 1.0}, {3, 1.0}};
  CHECK(std::abs(carlson_mean(f, 1e4) - 2.0) < 1e-3);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = oracle::random_poly(rng, 4, 30);
    const double k = carlson_error_constant(g);
    for (double t : {1e2, 1e3, 1e4}) {
      CHECK(std::abs(carlson_mean(g, t) - h2_norm_sq(g)) <= k / t + 1e-9);
    }
  }
}

TEST_CASE("h2k_norm") {
  for (unsigned k = 1; k <= 6; ++k) {
    CHECK(h2k_norm(DirichletPoly::monomial(2, 0.7), k) ==
          doctest::Approx(std::pow(0.7, 2.0 * k)));
  }
  CHECK(h2k_norm(DirichletPoly{{2, 1.0}, {3, 1.0}}, 2) == doctest::Approx(6.0));
  CHECK(h2k_norm(DirichletPoly{{2, 1.0}, {3, 1.0}, {5, 1.0}}, 1) == doctest::Approx(3.0));
  CHECK_THROWS_AS(h2k_norm(DirichletPoly{{2, 1.0}, {3, 1.0}}, 30), PreconditionError);
}

TEST_CASE("power means of L_c are nonincreasing") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double c1 = u(rng), c2 = u(rng), c3 = u(rng);
    const DirichletPoly l{{2, c1}, {3, c2}, {5, c3}};
    const double r = c1 + c2 + c3;
    double prev = 1.0;
    for (unsigned k = 1; k <= 7; ++k) {
      const double v = h2k_norm(l, k) / std::pow(r, 2.0 * k);
      CHECK(v <= prev + 1e-14);
      prev = v;
    }
  }
}
