#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "compnorm/composition.h"
#include "compnorm/errors.h"
#include "compnorm/opnorm.h"
#include "compnorm/zeta.h"
#include "doctest.h"

using namespace compnorm;

namespace {

double eigen_max(const DenseMatrix& g) {
  Eigen::MatrixXcd m(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) m(i, j) = g(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

double column_norm_sq(const TruncatedOperator& op, std::size_t col) {
  double s = 0.0;
  for (std::size_t i = 0; i < op.entries.rows(); ++i) s += std::norm(op.entries(i, col));
  return s;
}

}  // namespace

TEST_CASE("build_matrix structure") {
  const AffineSymbol phi(cplx(2.0, 0.3), {0.5, 0.0, 0.7});
  const auto op = build_matrix(phi, 12, 6);
  // Two active coordinates: binom(6 + 2, 2) rows.
  CHECK(op.out_indices.size() == 28);
  CHECK(op.entries(0, 0) == cplx(1.0));
  for (std::size_t i = 1; i < op.entries.rows(); ++i) CHECK(op.entries(i, 0) == cplx(0.0));
  for (const auto& k : op.out_indices) CHECK(k[1] == 0u);

  const AffineSymbol constant(cplx(1.5, 2.0), {});
  const auto cop = build_matrix(constant, 9, 5);
  REQUIRE(cop.entries.rows() == 1);
  for (unsigned n = 1; n <= 9; ++n) {
    CHECK(std::abs(cop.entries(0, n - 1) - std::exp(-cplx(1.5, 2.0) * std::log(double(n)))) < 1e-15);
  }
  CHECK_THROWS_AS(build_matrix(AffineSymbol(2.0, {0.3, 0.3, 0.3, 0.3}), 4000, 30),
                  PreconditionError);
}

TEST_CASE("entries follow the closed form") {
  const AffineSymbol phi(2.5, {0.8, 0.6});
  const auto op = build_matrix(phi, 6, 4);
  for (std::size_t i = 0; i < op.out_indices.size(); ++i) {
    const auto& k = op.out_indices[i];
    for (unsigned n = 2; n <= 6; ++n) {
      const double ln = std::log(double(n));
      const double expected = std::pow(n, -2.5) * std::pow(-ln, k[0] + k[1]) *
                              std::pow(0.8, k[0]) / std::tgamma(k[0] + 1.0) *
                              std::pow(0.6, k[1]) / std::tgamma(k[1] + 1.0);
      CHECK(op.entries(i, n - 1).real() == doctest::Approx(expected).epsilon(1e-13));
    }
  }
}

TEST_CASE("column defects certify against the composition norm") {
  const AffineSymbol phi(1.9, {0.6, 0.5, 0.2});
  for (unsigned K : {4u, 10u, 30u}) {
    const auto op = build_matrix(phi, 20, K);
    for (unsigned n = 1; n <= 20; ++n) {
      const double col = column_norm_sq(op, n - 1);
      CHECK(op.column_defect[n - 1] >= -1e-12);
      CHECK(std::abs(col + op.column_defect[n - 1] -
                     comp_norm_sq(phi, DirichletPoly::monomial(n))) < 1e-10);
      if (K == 30) CHECK(op.column_defect[n - 1] < 1e-12);
    }
  }
}

TEST_CASE("closed-form Gram equals A*A") {
  const AffineSymbol phi(cplx(2.2, -0.4), {0.9, 0.4, 0.3});
  const auto op = build_matrix(phi, 15, 12);
  const auto g1 = gram(op);
  const auto g2 = gram_closed_form(phi, 15, 12);
  for (std::size_t i = 0; i < 15; ++i) {
    for (std::size_t j = 0; j < 15; ++j) CHECK(std::abs(g1(i, j) - g2(i, j)) < 1e-13);
  }
}

TEST_CASE("sigma_max_sq") {
  const AffineSymbol constant(1.3, {});
  const auto op = build_matrix(constant, 40, 3);
  double expected = 0.0;
  for (unsigned n = 1; n <= 40; ++n) expected += std::pow(n, -2.6);
  CHECK(sigma_max_sq(op) == doctest::Approx(expected).epsilon(1e-10));
  CHECK(expected < zeta(2.6));

  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double r = 0.2 + u(rng);
    const AffineSymbol phi(cplx(0.5 + r + u(rng), u(rng)), {r * 0.6, r * 0.4});
    const auto t = build_matrix(phi, 24, 10);
    const double s = sigma_max_sq(t);
    double max_col = 0.0;
    for (unsigned n = 0; n < 24; ++n) max_col = std::max(max_col, column_norm_sq(t, n));
    CHECK(s >= max_col - 1e-12);
    CHECK(s == doctest::Approx(eigen_max(gram(t))).epsilon(1e-8));
    CHECK(s <= eigen_max(gram(t)) * (1 + 1e-14));
  }
}

TEST_CASE("sigma_max_sq grows with the truncation") {
  const AffineSymbol phi(1.5, {1.0});
  double prev = 0.0;
  for (auto [n, k] : {std::pair{8u, 10u}, {16u, 24u}, {32u, 32u}, {64u, 40u}}) {
    const double s = sigma_max_sq(build_matrix(phi, n, k));
    CHECK(s >= prev - 1e-12);
    prev = s;
  }
  CHECK(sigma_max_sq(build_matrix(phi, 16, 24)) > zeta(3.0));

  const AffineSymbol phi3(2.0, {0.7, 0.5, 0.3});
  prev = 0.0;
  for (auto [n, k] : {std::pair{4u, 4u}, {8u, 8u}, {16u, 12u}, {24u, 16u}}) {
    const double s = largest_eigenvalue(gram_closed_form(phi3, n, k));
    CHECK(s >= prev - 1e-12);
    prev = s;
  }
}

TEST_CASE("kernel_quotient") {
  const AffineSymbol phi(1.7, {0.6, 0.4});
  const auto far = kernel_quotient(phi, 50.0, 32, 30);
  CHECK(far.ratio > 0.99);
  CHECK(far.ratio < 1.01);

  const AffineSymbol constant(1.4, {});
  for (double w : {0.6, 1.0, 2.0, 5.0}) {
    const auto q = kernel_quotient(constant, w, 200, 5);
    CHECK(q.ratio * q.ratio <= zeta(2.8) + 1e-6);
  }
  const auto q = kernel_quotient(phi, cplx(0.9, 3.0), 64, 30);
  CHECK(q.kernel_defect > 0.0);
  CHECK(q.kernel_defect < 1.0);
  CHECK(q.image_defect >= -1e-10);
  CHECK_THROWS_AS(kernel_quotient(phi, 0.5, 10, 10), DomainError);
}

TEST_CASE("adjoint_bound_general") {
  const AffineSymbol constant(1.2, {});
  CHECK(adjoint_bound_general(constant, FullIntegers{}, {40.0}) >= zeta(2.4) - 1e-4);

  const AffineSymbol phi(1.5, {1.0});
  const double geo = adjoint_bound_general(phi, GeometricPowers{2}, default_sigma_grid(GeometricPowers{2}));
  const double full = adjoint_bound_general(phi, FullIntegers{}, default_sigma_grid(FullIntegers{}));
  CHECK(geo > full);
  CHECK(full > zeta(3.0));
  CHECK(geo == doctest::Approx(adjoint_bound_2s(1.5, 1.0)).epsilon(1e-9));

  const AffineSymbol two(2.0, {0.5, 0.5});
  CHECK(adjoint_bound_general(two, PrimeSemigroup{{2, 3}}, default_sigma_grid(PrimeSemigroup{{2, 3}})) >
        zeta(4.0));
  CHECK_THROWS_AS(adjoint_bound_general(two, GeometricPowers{2}, {1.0}), PreconditionError);
  CHECK_THROWS_AS(adjoint_bound_general(phi, FullIntegers{}, {}), PreconditionError);
  CHECK_THROWS_AS(adjoint_bound_general(phi, FullIntegers{}, {0.5}), PreconditionError);
}

TEST_CASE("adjoint_bound_2s") {
  CHECK(adjoint_bound_2s(0.75, 0.25) == doctest::Approx(4.0).epsilon(1e-12));
  for (double x : {0.1, 0.2, 0.25}) {
    CHECK(std::abs(adjoint_bound_2s(0.5 + x, x) - 1.0 / x) < 1e-6);
  }
  CHECK(adjoint_bound_2s(1.5, 1.0) >= std::max(1.0, zeta(3.0)));
  CHECK(adjoint_bound_2s(1.5, 1.0) > zeta(3.0) + 0.05);
  for (int i = 0; i < 50; ++i) {
    const double r = 0.05 + 0.06 * i;
    const double a = r * (1.0 + 0.04 * (i % 7));
    const double v = adjoint_bound_2s(cplx(0.5 + a, 0.3 * i), r);
    CHECK(v >= 1.0 / xi(cplx(0.5 + a), r) - 1e-9);
  }
  CHECK_THROWS_AS(adjoint_bound_2s(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(adjoint_bound_2s(1.0, 0.0), DomainError);
}

TEST_CASE("bound_suite examples") {
  const auto a = bound_suite(AffineSymbol(1.5, {1.0}));
  CHECK(a.at("genlower").value == doctest::Approx(1.2020569031595942));
  CHECK(a.at("mpq_upper").value == doctest::Approx(1.6449340668482264));
  CHECK_FALSE(a.at("newupper").applicable);
  CHECK(std::isnan(a.at("newupper").value));
  CHECK(a.consistent());

  const auto b = bound_suite(AffineSymbol(2.5, {2.0}));
  CHECK(b.at("newupper").applicable);
  CHECK(b.at("newupper").value == doctest::Approx((zeta(5.0) + zeta(3.0)) / 2));
  CHECK(b.at("newupper").value < b.at("mpq_upper").value);
  CHECK(b.consistent());

  const auto c = bound_suite(AffineSymbol(2.0, {0.5, 0.5}));
  CHECK_FALSE(c.at("mpq_upper").applicable);
  CHECK(c.at("combo_upper").value ==
        doctest::Approx(0.5 * zeta(4.0) + 0.5 * zeta(1.0 + xi(2.0, 1.0))));
  CHECK(c.at("smallnorm_upper").applicable);
  CHECK(c.at("smallnorm_upper").value == doctest::Approx(1.5 * zeta(4.0)));
  CHECK(c.consistent());
  CHECK_FALSE(c.at("brevig_lower").applicable);
}

TEST_CASE("bound reports are consistent and strictly above the general lower bound") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const double r = 0.1 + 1.5 * u(rng);
    const double a = r * (1.0 + (trial % 4 == 0 ? 0.0 : u(rng)));
    std::vector<double> coeffs(d);
    double s = 0.0;
    for (auto& v : coeffs) s += (v = 0.2 + u(rng));
    for (auto& v : coeffs) v *= r / s;
    // Slack keeps the boundary case inside the class after rounding.
    const AffineSymbol phi(cplx(0.5 + a * (1 + 1e-14), u(rng)), coeffs);
    const auto report = bound_suite(phi, 24, 30);
    CAPTURE(trial);
    CHECK(report.consistent());
    CHECK(report.max_lower() > report.at("genlower").value);
  }
}

TEST_CASE("truncated kernel sup dominates the adjoint quotient") {
  for (const auto& phi : {AffineSymbol(1.5, {1.0}), AffineSymbol(2.0, {0.8, 0.4})}) {
    const double s = kernel_sup_sq(phi, 400, 60);
    LambdaSpec lambda = FullIntegers{};
    const double adjoint = adjoint_bound_general(phi, lambda, default_sigma_grid(lambda));
    const auto defect = kernel_quotient(phi, 0.8, 400, 60);
    CHECK(s >= adjoint - std::max(0.0, defect.kernel_defect));
  }
}

TEST_CASE("phi_alpha series coefficients") {
  const auto t = phi_alpha_taylor(0.7, 5);
  CHECK(t[0] == cplx(1.2));
  CHECK(t[1] == cplx(-1.4));
  CHECK(t[2] == cplx(1.4));

  // [z^j] exp(s z/(1+z)) = sum_i s^i/i! binom(j-1, i-1) (-1)^{j-i}.
  const double alpha = 0.9;
  const auto op = phi_alpha_matrix(alpha, 7, 25);
  for (unsigned n = 2; n <= 7; ++n) {
    const double s = 2.0 * alpha * std::log(double(n));
    for (unsigned j = 1; j <= 25; ++j) {
      // The alternating sum cancels heavily, so accumulate in long double.
      long double g = 0.0L, term = 1.0L, binom = 1.0L;
      for (unsigned i = 1; i <= j; ++i) {
        term *= s / i;
        if (i > 1) binom *= (long double)(j - i + 1) / (i - 1);
        g += term * binom * ((j - i) % 2 ? -1.0L : 1.0L);
      }
      const double expected = double(std::pow((long double)n, -0.5L - alpha) * g);
      CHECK(std::abs(op.entries(j, n - 1).real() - expected) < 1e-11);
    }
    CHECK(op.column_defect[n - 1] >= -1e-12);
  }
}

TEST_CASE("series matrix agrees with the affine matrix") {
  const auto a = build_matrix(AffineSymbol(cplx(1.8, 0.2), {0.9}), 10, 15);
  const auto s = build_matrix_series({cplx(1.8, 0.2), 0.9}, 2, 10, 15);
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 10; ++j) CHECK(std::abs(a.entries(i, j) - s.entries(i, j)) < 1e-14);
  }
}

TEST_CASE("phi_alpha kernel quotient matches the exact Gram form") {
  // Direct quadratic form with x_n = n^{-sigma} on n <= N and on n <= N/2.
  // Terms are positive, so the oracle increases in N and the gap between
  // the two truncations bounds its remaining error.
  auto oracle = [](double alpha, double sigma, unsigned n_max) {
    // x_m x_n (m/n)^alpha = u_m v_n.
    std::vector<long double> x(n_max + 1), u(n_max + 1), v(n_max + 1);
    for (unsigned n = 1; n <= n_max; ++n) {
      x[n] = std::pow((long double)n, -0.5L - sigma);
      u[n] = x[n] * std::pow((long double)n, (long double)alpha);
      v[n] = x[n] / std::pow((long double)n, (long double)alpha);
    }
    std::array<long double, 2> num{}, den{};
    for (unsigned m = 1; m <= n_max; ++m) {
      const int half = m <= n_max / 2 ? 0 : 1;
      long double row = x[m] * x[m];
      for (unsigned n = m + 1; n <= n_max; ++n) {
        const long double t = 2.0L * u[m] * v[n];
        if (n <= n_max / 2) num[0] += t; else num[1] += t;
      }
      num[half] += row;
      den[half] += row * m;
    }
    const long double full = (num[0] + num[1]) / (den[0] + den[1]);
    return std::pair{double(full), double(full - num[0] / den[0])};
  };
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double sigma : {1.5, 2.5}) {
      const auto [value, gap] = oracle(alpha, sigma, 4000);
      const double lib = phi_alpha_kernel_quotient_sq(alpha, sigma);
      CAPTURE(alpha);
      CAPTURE(sigma);
      CHECK(lib >= value - 1e-12);
      CHECK(lib - value <= 2.0 * gap + 1e-11);
    }
  }
  const auto g = phi_alpha_gram(1.0, 4);
  CHECK(g(1, 3).real() == doctest::Approx(std::pow(8.0, -0.5) * 0.5));
}

TEST_CASE("suite_for_phi_alpha") {
  const auto one = suite_for_phi_alpha(1.0);
  CHECK(one.at("brevig_lower").value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(one.at("brevig_upper").value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(one.at("adjoint_lower").value >= std::max(2.0, zeta(3.0)) - 1e-12);
  CHECK(one.at("kernel_S_lower").value >= 2.0 - 0.05);
  CHECK(one.consistent());

  const auto three = suite_for_phi_alpha(3.0);
  CHECK(three.at("brevig_lower").value == doctest::Approx(zeta(7.0)));
  CHECK(three.at("brevig_upper").value == doctest::Approx(zeta(4.0)));
  CHECK(three.at("brevig_upper").value > three.at("brevig_lower").value);
  CHECK(three.consistent());

  const double a0 = alpha0();
  for (double alpha : {0.3, 0.5, 1.0, 1.4, a0}) {
    const auto rep = suite_for_phi_alpha(alpha, 16, 30);
    CHECK(rep.at("brevig_lower").value == doctest::Approx(2.0 / alpha).epsilon(1e-12));
    CHECK(rep.at("brevig_upper").value == doctest::Approx(2.0 / alpha).epsilon(1e-9));
    CHECK(rep.consistent());
  }
}
