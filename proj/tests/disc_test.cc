#include <cmath>
#include <random>

#include "compnorm/disc.h"
#include "compnorm/errors.h"
#include "doctest.h"

using namespace compnorm;

namespace {

PowerSeries random_series(std::mt19937_64& rng, unsigned degree) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> c(degree + 1);
  for (auto& v : c) v = cplx(g(rng), g(rng));
  return PowerSeries(std::move(c));
}

// z * p(z) scaled so that sum |coeffs| = scale <= 1, hence a self-map fixing 0.
PowerSeries random_self_map(std::mt19937_64& rng, unsigned degree, double scale) {
  auto p = random_series(rng, degree);
  std::vector<cplx> c(degree + 2);
  double l1 = 0.0;
  for (unsigned k = 0; k <= degree; ++k) l1 += std::abs(p[k]);
  for (unsigned k = 0; k <= degree; ++k) c[k + 1] = p[k] * (scale / l1);
  return PowerSeries(std::move(c));
}

}  // namespace

TEST_CASE("PowerSeries basics") {
  const PowerSeries f({1.0, cplx(0, 2), -3.0});
  CHECK(f.degree() == 2);
  CHECK(f.norm_sq() == 14.0);
  CHECK(std::abs(f(cplx(0.5, 0.5)) - (1.0 + cplx(0, 2) * cplx(0.5, 0.5) - 3.0 * cplx(0, 0.5))) <
        1e-15);
  CHECK(PowerSeries::geometric(0.5, 3)[3] == cplx(0.125));
  const auto t = taylor(psi_map(), 10);
  for (unsigned j = 1; j <= 10; ++j) CHECK(t[j].real() == std::ldexp(1.0, -int(j)));
  CHECK(t[0] == cplx(0.0));
}

TEST_CASE("compose_truncated") {
  const auto g = compose_truncated(PowerSeries::identity(), psi_map(), 30);
  CHECK(g[0] == cplx(0.0));
  for (unsigned j = 1; j <= 30; ++j) CHECK(std::abs(g[j] - std::ldexp(1.0, -int(j))) < 1e-15);

  std::mt19937_64 rng(79);
  const auto f = random_series(rng, 12);
  const auto same = compose_truncated(f, PowerSeries::identity(), 8);
  for (unsigned k = 0; k <= 8; ++k) CHECK(std::abs(same[k] - f[k]) < 1e-15);
  CHECK(compose_truncated(PowerSeries({1.0}), psi_map(), 5).norm_sq() == 1.0);

  // Polynomial composition is exact at N = deg f * deg phi.
  for (int trial = 0; trial < 10; ++trial) {
    const auto ff = random_series(rng, 6);
    const auto phi = random_self_map(rng, 2, 0.9);
    const auto h = compose_truncated(ff, phi, 18);
    for (cplx z : {cplx(0.3, 0.1), cplx(-0.5, 0.4), cplx(0.0, -0.7)}) {
      CHECK(std::abs(h(z) - ff(phi(z))) < 1e-12 * (1 + std::abs(ff(phi(z)))));
    }
  }

  const auto f1 = random_series(rng, 10), f2 = random_series(rng, 10);
  const cplx a(0.3, -1.2), b(2.0, 0.5);
  std::vector<cplx> mix(11);
  for (unsigned k = 0; k <= 10; ++k) mix[k] = a * f1[k] + b * f2[k];
  const auto lhs = compose_truncated(PowerSeries(mix), psi_map(), 40);
  const auto r1 = compose_truncated(f1, psi_map(), 40), r2 = compose_truncated(f2, psi_map(), 40);
  for (unsigned k = 0; k <= 40; ++k) CHECK(std::abs(lhs[k] - (a * r1[k] + b * r2[k])) < 1e-12);

  CHECK_THROWS_AS(compose_truncated(f, PowerSeries({0.0, 1.5}), 5), DomainError);
  CHECK_THROWS_AS(compose_truncated(f, PowerSeries({1.0}), 5), DomainError);
}

TEST_CASE("psi_matrix") {
  const auto m = psi_matrix(64);
  CHECK(m[0][0] == 1.0);
  for (unsigned j = 1; j <= 64; ++j) CHECK(m[j][0] == 0.0);
  double col1 = 0.0;
  for (unsigned j = 1; j <= 64; ++j) {
    CHECK(m[j][1] == std::ldexp(1.0, -int(j)));
    col1 += m[j][1] * m[j][1];
  }
  CHECK(col1 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(m[5][3] == doctest::Approx(6.0 / 32.0));

  // sum_{j >= k} 2^{-j} binom(j-1, k-1) = 1; beyond j = 600 the terms for k <= 40 are < 1e-100.
  const auto big = psi_matrix(600);
  for (unsigned k = 1; k <= 40; ++k) {
    double s = 0.0;
    for (unsigned j = k; j <= 600; ++j) s += big[j][k];
    CHECK(std::abs(s - 1.0) < 1e-12);
  }

  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_series(rng, 64);
    const auto direct = compose_truncated(f, psi_map(), 64);
    const auto applied = psi_apply(f, 64);
    for (unsigned j = 0; j <= 64; ++j) {
      cplx s{};
      for (unsigned k = 0; k <= j; ++k) s += m[j][k] * f[k];
      CHECK(std::abs(s - direct[j]) < 1e-12);
      CHECK(std::abs(applied[j] - direct[j]) < 1e-12);
    }
  }
  CHECK(psi_apply(PowerSeries({1.0}), 10).norm_sq() == 1.0);
  CHECK_THROWS_AS(psi_matrix(0), PreconditionError);
}

TEST_CASE("psi bound on random series") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_series(rng, 256);
    const double bound = (std::norm(f[0]) + f.norm_sq()) / 2.0;
    CHECK(psi_apply(f, 256).norm_sq() <= bound + 1e-10);
  }
}

TEST_CASE("psi bound is nearly attained by 1/(1 - 0.99 z)") {
  const double r = 0.99;
  const auto f = PowerSeries::geometric(r, 2000);
  const double bound = (1.0 + f.norm_sq()) / 2.0;
  const double lhs = psi_apply(f, 2000).norm_sq();
  // f o psi = (2 - z)/(2 - (1 + r) z) = 1 + sum_{j>=1} ((2 - 1/q)/2) q^j z^j, q = (1 + r)/2.
  const double q = (1.0 + r) / 2.0;
  const double beta = (2.0 - 1.0 / q) / 2.0;
  // Truncating f and the image at degree 2000 drops terms of order 0.99^2000 ~ 2e-9.
  CHECK(lhs == doctest::Approx(1.0 + beta * beta * q * q / (1.0 - q * q)).epsilon(1e-7));
  CHECK(lhs / bound > 0.95);
  CHECK(lhs / bound <= 1.0);
}

TEST_CASE("mobius_comp_norm_sq") {
  CHECK(mobius_comp_norm_sq(0.0) == 1.0);
  CHECK(mobius_comp_norm_sq(1.0 / 3.0) == doctest::Approx(2.0));
  CHECK(mobius_comp_norm_sq(cplx(0, 0.5)) == doctest::Approx(3.0));
  CHECK_THROWS_AS(mobius_comp_norm_sq(1.0), DomainError);
}

TEST_CASE("littlewood_check") {
  std::mt19937_64 rng(97);
  const auto f = random_series(rng, 10);
  const auto iso = littlewood_check(PowerSeries::monomial(2), f, 20);
  CHECK(iso.lhs == doctest::Approx(iso.rhs).epsilon(1e-14));
  CHECK(iso.ok);
  for (unsigned m : {1u, 3u, 5u}) {
    const auto c = littlewood_check(PowerSeries::monomial(m), f, 10 * m);
    CHECK(c.lhs == doctest::Approx(c.rhs).epsilon(1e-14));
  }
  const auto half = littlewood_check(PowerSeries({0.0, 0.5}), PowerSeries::identity(), 5);
  CHECK(half.lhs == 0.25);
  CHECK(half.rhs == 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto phi = random_self_map(rng, 1 + trial % 4, 1.0);
    const auto g = random_series(rng, 8);
    const auto c = littlewood_check(phi, g, 8 * (2 + trial % 4));
    CHECK(c.ok);
    CHECK(c.lhs <= c.rhs + 1e-9);
  }
  CHECK_THROWS_AS(littlewood_check(PowerSeries({0.1, 0.5}), f, 5), PreconditionError);
}

TEST_CASE("shapiro_bound_check") {
  std::mt19937_64 rng(101);
  const auto f = random_series(rng, 12);
  const auto zero = shapiro_bound_check(PowerSeries({0.0, 0.5, 0.3}), 0.0, f, 4096, 24);
  CHECK(zero.c_delta == 0.0);
  CHECK(zero.rhs == doctest::Approx(f.norm_sq()));
  CHECK(zero.ok);

  for (double delta : {0.2, 0.6, 0.9, 0.999}) {
    const auto c = shapiro_bound_check(psi_map(), delta, f, 4096, 200);
    CHECK(c.c_delta <= 0.5 + 1e-12);
    CHECK(c.ok);
  }
  // |psi(e^{it})| = 1/|2 - e^{it}| >= 1/3, so E_delta is empty below 1/3.
  CHECK(shapiro_bound_check(psi_map(), 0.3, f, 4096, 100).measure == 0.0);

  for (int trial = 0; trial < 20; ++trial) {
    const auto phi = random_self_map(rng, 1 + trial % 3, 0.95);
    const auto g = random_series(rng, 6);
    const auto c = shapiro_bound_check(phi, 0.5, g, 4096, 6 * (2 + trial % 3));
    CAPTURE(trial);
    CHECK(c.ok);
    CHECK(c.measure > 0.0);
  }
}
