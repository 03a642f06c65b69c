// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Optional argv[1] is the path of the compnorm executable, used for
// the exit-code part of criterion 12.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "compnorm/composition.h"
#include "compnorm/disc.h"
#include "compnorm/majorization.h"
#include "compnorm/opnorm.h"
#include "compnorm/report.h"
#include "compnorm/torus.h"
#include "compnorm/verify.h"
#include "compnorm/zeta.h"
#include "oracles.h"

using namespace compnorm;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds; 0 for none
  std::function<Outcome()> run;
};

std::string fmt(double x) { return format15(x); }

std::vector<double> random_coeffs(std::mt19937_64& rng, std::size_t d, double r) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> v(d);
  for (auto& x : v) x = u(rng);
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  for (auto& x : v) x *= r / s;
  return v;
}

Outcome shapiro_constant_example() {
  const auto& phi = std::get<PolySymbol>(find_fixture("single-prime-disc").data);
  const double delta = std::sqrt(5.0 / 8.0);
  const double expected = (13.0 - 4.0 * std::sqrt(10.0)) / 18.0;
  const double got = shapiro_constant(phi, delta, SamplePlan{1000000, 1});
  const double err = std::abs(got - expected);
  return {err < 2e-3, "C = " + fmt(got) + ", expected " + fmt(expected) + ", |err| = " + fmt(err) +
                          " < 2e-3"};
}

Outcome annulus_radii_traces() {
  const std::pair<const char*, double> cases[] = {
      {"annulus-a", 0.5}, {"annulus-b", 0.0}, {"annulus-c", 1.0 / 3.0}};
  bool ok = true;
  std::ostringstream os;
  for (const auto& [name, want] : cases) {
    const auto& phi = std::get<AffineSymbol>(find_fixture(name).data);
    const auto t0 = std::chrono::steady_clock::now();
    const auto ext = trace_extremes(curve_trace(phi, -200.0, 200.0, 400000), phi.c());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double err = std::abs(ext.inner - want * phi.r());
    ok = ok && err < 1e-2 && secs < 10.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s inner %.6f (|err| %.2e, %.2f s); ", name, ext.inner, err, secs);
    os << buf;
  }
  return {ok, os.str() + "tol 1e-2, 10 s each"};
}

Outcome multinomial_exact() {
  const auto rows = multinomial_inequality(60);
  bool ok = rows.size() == 60;
  int equalities = 0;
  for (const auto& row : rows) {
    ok = ok && row.ok && row.equal == (row.k == 1);
    equalities += row.equal;
  }
  ok = ok && rows.front().lhs == 18 && rows.front().rhs == 18;
  return {ok, "k = 1..60 exact, equalities " + std::to_string(equalities) + " (k = 1: " +
                  rows.front().lhs.str() + " = " + rows.front().rhs.str() + ")"};
}

Outcome adjoint_two_s() {
  bool ok = true;
  double worst_boundary = 0.0;
  for (double x : {0.1, 0.2, 0.25}) {
    const double err = std::abs(adjoint_bound_2s(0.5 + x, x) - 1.0 / x);
    worst_boundary = std::max(worst_boundary, err);
    ok = ok && err < 1e-6;
  }
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_margin = INFINITY;
  for (int i = 0; i < 50; ++i) {
    const double r = 0.05 + 2.0 * u(rng);
    const double a = r * (1.0 + u(rng));
    const cplx c(0.5 + a, 2.0 * u(rng) - 1.0);
    const double margin = adjoint_bound_2s(c, r) - 1.0 / xi(c, r);
    worst_margin = std::min(worst_margin, margin);
    ok = ok && margin >= -1e-12;
  }
  return {ok, "boundary max |err| = " + fmt(worst_boundary) +
                  " < 1e-6; sweep min(value - 1/xi) = " + fmt(worst_margin) + " >= -1e-12"};
}

Outcome phi_alpha_certified() {
  bool ok = true;
  std::ostringstream os;
  for (double alpha : {0.5, 1.0, 1.4}) {
    const auto rep = suite_for_phi_alpha(alpha);
    const double lo = rep.at("brevig_lower").value, hi = rep.at("brevig_upper").value;
    const double err = std::max(std::abs(lo - 2.0 / alpha), std::abs(hi - 2.0 / alpha));
    ok = ok && err < 1e-9 && rep.consistent();
    os << "alpha " << fmt(alpha) << " |err| " << fmt(err) << "; ";
  }
  const double a0 = alpha0();
  const double residual = std::abs(a0 * zeta(1.0 + a0) - 2.0);
  ok = ok && a0 > 1.45 && a0 < 1.55 && residual < 1e-9;
  os << "alpha0 = " << fmt(a0) << ", residual " << fmt(residual) << " (tol 1e-9)";
  return {ok, os.str()};
}

Outcome newupper_dominance() {
  bool ok = true;
  double worst = INFINITY;
  for (double x : {1.5, 2.0, 3.0}) {
    const double lhs = (zeta(1.0 + 2.0 * x) + zeta(1.0 + x)) / 2.0;
    const double margin = zeta(1.0 + x) - lhs;
    const auto rep = bound_suite(AffineSymbol(0.5 + x, {x}));
    const auto& e = rep.at("newupper");
    ok = ok && e.applicable && std::abs(e.value - lhs) < 1e-12 && margin > 1e-3 && rep.consistent();
    worst = std::min(worst, margin);
  }
  return {ok, "min margin " + fmt(worst) + " > 1e-3"};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + trial % 4;
    const double r = 0.2 + 0.8 * u(rng);
    const cplx c(0.5 + r + u(rng), 2.0 * u(rng) - 1.0);
    std::vector<cplx> twisted;
    for (double v : random_coeffs(rng, d, r)) twisted.push_back(std::polar(v, 6.0 * u(rng)));
    const auto phi = AffineSymbol::from_complex(c, twisted);
    const auto f = oracle::random_poly(rng, 4, 40);
    worst = std::max(worst, std::abs(comp_norm_sq(phi, f) - comp_bruteforce_norm_sq(phi, f)));
  }
  // Carleson identity over the shipped affine fixtures, Bonferroni over 11.
  std::vector<AffineSymbol> symbols;
  for (const char* name : {"annulus-a", "annulus-b", "annulus-c"}) {
    symbols.push_back(std::get<AffineSymbol>(find_fixture(name).data));
  }
  for (const auto& [c, r] : std::get<TwoSFamily>(find_fixture("two-s-family").data).members) {
    symbols.emplace_back(c, std::vector<double>{r});
  }
  constexpr double kZ = 2.84;
  const DirichletPoly f{{1, 0.5}, {2, cplx(0.3, -0.7)}, {3, 0.6}, {4, 0.2}, {6, -0.4}};
  double worst_z = 0.0;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const auto m = carleson_mean(symbols[i], f, SamplePlan{200000, 11 + i});
    worst_z = std::max(worst_z, std::abs(m.estimate - comp_norm_sq(symbols[i], f)) / (m.ci95 / 1.96));
  }
  return {worst < 1e-8 && worst_z < kZ,
          "brute force max |diff| = " + fmt(worst) + " < 1e-8; Carleson max |z| = " + fmt(worst_z) +
              " < " + fmt(kZ) + " over " + std::to_string(symbols.size()) + " fixtures"};
}

Outcome pointeval_gap() {
  const AffineSymbol phi(1.5, {1.0});
  const double adj = adjoint_bound_2s(1.5, 1.0);
  const double mat = sigma_max_sq(build_matrix(phi, 64, 40));
  const double gap = std::max(adj, mat) - zeta(3.0);
  return {gap >= 1e-3, "adjoint " + fmt(adj) + ", matrix " + fmt(mat) + ", gap over zeta(3) " +
                           fmt(gap) + " >= 1e-3"};
}

Outcome dkzeta_riemann() {
  bool ok = true;
  std::ostringstream os;
  for (const char* name : {"dkzeta", "riemann"}) {
    const auto res = run_suite(name, 1);
    ok = ok && res.passed() && !res.checks.empty();
    os << (os.tellp() > 0 ? ", " : "") << name << " " << res.checks.size() << " checks "
       << (res.passed() ? "ok" : "FAILED");
  }
  return {ok, os.str()};
}

Outcome z2z_bound() {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g(0.0, 1.0);
  double worst = -INFINITY;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<cplx> c(257);
    for (auto& v : c) v = cplx(g(rng), g(rng));
    const PowerSeries f(std::move(c));
    const double bound = (std::norm(f[0]) + f.norm_sq()) / 2.0;
    worst = std::max(worst, psi_apply(f, 256).norm_sq() / bound);
  }
  const auto f = PowerSeries::geometric(0.99, 4000);
  const double ratio = psi_apply(f, 4000).norm_sq() / ((1.0 + f.norm_sq()) / 2.0);
  return {worst <= 1.0 + 1e-12 && ratio > 0.95 && ratio <= 1.0 + 1e-12,
          "random max ratio " + fmt(worst) + " <= 1; 1/(1 - 0.99 z) ratio " + fmt(ratio) + " > 0.95"};
}

Outcome subordination() {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  bool ok = true;
  int pairs = 0, strict_pairs = 0;
  double worst_residual = 0.0, min_gap = INFINITY;
  while (pairs < 50) {
    const std::size_t d = 2 + pairs % 4;
    const double r = 0.3 + u(rng);
    const double c = 0.5 + r + 0.3 * u(rng);
    const auto cv = random_coeffs(rng, d, r);
    // b = W c for a random doubly stochastic W built from two transpositions.
    std::vector<double> bv = cv;
    const double w = 0.1 + 0.8 * u(rng);
    for (std::size_t i = 0; i + 1 < d; i += 2) {
      const double x = bv[i], y = bv[i + 1];
      bv[i] = w * x + (1 - w) * y;
      bv[i + 1] = (1 - w) * x + w * y;
    }
    const CoeffVector B(bv), C(cv);
    if (!majorizes(B, C)) continue;
    ++pairs;
    const auto parts = bvn_decompose(B, C);
    const auto rebuilt = apply_decomposition(parts, C);
    for (std::size_t i = 0; i < d; ++i) {
      worst_residual = std::max(worst_residual, std::abs(rebuilt[i] - bv[i]));
    }
    auto f = oracle::random_poly(rng, 4, 40);
    f = f + DirichletPoly{{2, 1.0}};  // non-constant
    const double nb = comp_norm_sq(AffineSymbol(c, bv), f);
    const double nc = comp_norm_sq(AffineSymbol(c, cv), f);
    ok = ok && nb <= nc * (1 + 1e-12);
    auto sb = bv, sc = cv;
    std::sort(sb.begin(), sb.end());
    std::sort(sc.begin(), sc.end());
    bool perm = true;
    for (std::size_t i = 0; i < d; ++i) perm = perm && std::abs(sb[i] - sc[i]) < 1e-12;
    if (!perm && strict_pairs < 20) {
      ++strict_pairs;
      min_gap = std::min(min_gap, nc - nb);
    }
  }
  ok = ok && strict_pairs == 20 && min_gap > 0.0 && worst_residual < 1e-10;
  return {ok, "50 pairs ordered; min strict gap over 20 non-permutation pairs " + fmt(min_gap) +
                  " > 0; bvn residual " + fmt(worst_residual) + " < 1e-10"};
}

int run_cli(const std::string& cmd) {
  const int status = std::system((cmd + " > /dev/null").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome consistency_gate(const std::string& cli) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 1 + i % 3;
    const double r = 0.05 + 2.0 * u(rng);
    const double a = r * (i % 5 == 0 ? 1.0 : 1.0 + 2.0 * u(rng)) * (1 + 1e-14);
    const auto rep =
        bound_suite(AffineSymbol(cplx(0.5 + a, u(rng)), random_coeffs(rng, d, r)), 16, 24);
    violations += !rep.consistent();
  }
  std::string detail = "200-point sweep, violations " + std::to_string(violations);
  bool ok = violations == 0;
  if (!cli.empty()) {
    const int code = run_cli(cli + " bounds --sweep 200 --seed 12");
    detail += "; CLI sweep exit " + std::to_string(code);
    ok = ok && code == 0;
  } else {
    detail += "; CLI not given, exit code unchecked";
  }
  return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "Shapiro constant on the single-prime disc symbol", 30, shapiro_constant_example},
      {2, "annulus inner radii from curve traces", 30, annulus_radii_traces},
      {3, "exact multinomial inequality k <= 60", 5, multinomial_exact},
      {4, "adjoint bound for c + r 2^{-s}", 0, adjoint_two_s},
      {5, "phi_alpha norm 2/alpha and alpha0", 0, phi_alpha_certified},
      {6, "newupper dominance for xi >= alpha0", 0, newupper_dominance},
      {7, "composition norm oracles and Carleson identity", 0, oracle_equivalence},
      {8, "strict gap over zeta(3) for 3/2 + 2^{-s}", 60, pointeval_gap},
      {9, "zeta derivative sandwich and Riemann-sum monotonicity", 5, dkzeta_riemann},
      {10, "disc bound for z/(2 - z) and its extremal family", 0, z2z_bound},
      {11, "subordination under majorization", 0, subordination},
      {12, "bound consistency gate", 0, [&] { return consistency_gate(cli); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.time_limit == 0 || secs < c.time_limit;
    const bool ok = out.ok && in_time;
    failures += !ok;
    std::printf("[%s] criterion %2d: %s: %s; %.2f s", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                out.detail.c_str(), secs);
    if (c.time_limit > 0) std::printf(" (limit %.0f s)", c.time_limit);
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
