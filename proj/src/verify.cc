#include "compnorm/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "compnorm/composition.h"
#include "compnorm/disc.h"
#include "compnorm/errors.h"
#include "compnorm/majorization.h"
#include "compnorm/opnorm.h"
#include "compnorm/report.h"
#include "compnorm/torus.h"
#include "compnorm/zeta.h"

namespace compnorm {

namespace {

using Rng = std::mt19937_64;

CheckResult at_most(std::string label, double value, double bound) {
  return {std::move(label), value, bound, value <= bound};
}

CheckResult at_least(std::string label, double value, double bound) {
  return {std::move(label), value, bound, value >= bound};
}

std::string num(double x) { return format15(x); }

std::vector<double> random_coeffs(Rng& rng, std::size_t d, double r) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> v(d);
  for (auto& x : v) x = u(rng);
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  for (auto& x : v) x *= r / s;
  return v;
}

// A convex combination of three permutations of c.
std::vector<double> random_majorized(Rng& rng, const std::vector<double>& c) {
  std::uniform_real_distribution<double> u(0.05, 1.05);
  std::vector<double> out(c.size(), 0.0);
  std::vector<std::size_t> perm(c.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<double, std::vector<std::size_t>>> parts;
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    std::shuffle(perm.begin(), perm.end(), rng);
    parts.emplace_back(u(rng), perm);
    total += parts.back().first;
  }
  for (const auto& [w, p] : parts) {
    for (std::size_t i = 0; i < c.size(); ++i) out[i] += w / total * c[p[i]];
  }
  const double diff = std::accumulate(c.begin(), c.end(), 0.0) -
                      std::accumulate(out.begin(), out.end(), 0.0);
  out.back() = std::max(0.0, out.back() + diff);
  return out;
}

DirichletPoly random_poly(Rng& rng, int terms) {
  static const std::vector<std::uint64_t> smooth{1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20,
                                                  24, 25, 27, 30, 32, 36};
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, smooth.size() - 1);
  DirichletPoly::Map m;
  for (int i = 0; i < terms; ++i) m[smooth[pick(rng)]] += cplx(coef(rng), coef(rng));
  return DirichletPoly(m);
}

PowerSeries random_series(Rng& rng, unsigned degree) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> c(degree + 1);
  for (auto& v : c) v = cplx(g(rng), g(rng));
  return PowerSeries(std::move(c));
}

SuiteResult dkzeta(std::uint64_t) {
  SuiteResult s{"dkzeta", "sandwich k!(zeta-1)/(sigma-1)^k <= (-1)^k zeta^(k) <= k! zeta/(sigma-1)^k",
                {}};
  for (unsigned k = 1; k <= kMaxZetaDerivOrder; ++k) {
    for (double sigma : {1.05, 1.1, 1.2, 1.5, 2.0, 2.5, 3.0, 5.0, 10.0}) {
      const auto w = dkzeta_sandwich(k, sigma);
      const std::string at = "k=" + std::to_string(k) + " sigma=" + num(sigma);
      s.checks.push_back(at_least("lower <= mid " + at, w.mid, w.lower));
      s.checks.push_back(at_most("mid <= upper " + at, w.mid, w.upper));
    }
  }
  return s;
}

SuiteResult riemann(std::uint64_t) {
  SuiteResult s{"riemann", "Riemann sums U(m) nonincreasing, L(m) nondecreasing in m", {}};
  for (double sigma : {1.1, 1.5, 2.0, 3.0, 5.0}) {
    auto prev = riemann_sum_bounds(sigma, 1);
    s.checks.push_back(at_most("U(1) = zeta sigma=" + num(sigma),
                               std::abs(prev.upper - zeta(sigma)), 1e-12 * zeta(sigma)));
    for (std::uint64_t m = 2; m <= 100; ++m) {
      const auto cur = riemann_sum_bounds(sigma, m);
      const std::string at = "sigma=" + num(sigma) + " m=" + std::to_string(m);
      s.checks.push_back(at_most("U monotone " + at, cur.upper, prev.upper + 1e-13));
      s.checks.push_back(at_least("L monotone " + at, cur.lower, prev.lower - 1e-13));
      prev = cur;
    }
  }
  return s;
}

SuiteResult alpha0_suite(std::uint64_t) {
  SuiteResult s{"alpha0", "alpha0 solves alpha zeta(1 + alpha) = 2", {}};
  const double a = alpha0();
  s.checks.push_back(at_least("alpha0 > 1.45", a, 1.45));
  s.checks.push_back(at_most("alpha0 < 1.55", a, 1.55));
  s.checks.push_back(at_most("residual", std::abs(a * zeta(1.0 + a) - 2.0), 1e-9));
  return s;
}

SuiteResult multinomial(std::uint64_t) {
  SuiteResult s{"multinomial",
                "sum (k; j1,j2,j3)^2 16^j1 <= 9^k binom(2k,k), equality only at k = 1", {}};
  for (const auto& row : multinomial_inequality(60)) {
    const std::string at = "k=" + std::to_string(row.k);
    s.checks.push_back({"inequality " + at, row.ok ? 1.0 : 0.0, 1.0, row.ok});
    const bool equality_ok = row.equal == (row.k == 1);
    s.checks.push_back({"equality pattern " + at, row.equal ? 1.0 : 0.0, row.k == 1 ? 1.0 : 0.0,
                        equality_ok});
  }
  return s;
}

SuiteResult adjoint(std::uint64_t seed) {
  SuiteResult s{"adjoint", "adjoint kernel lower bound; 1/xi on the boundary Re c - 1/2 = r", {}};
  for (double x : {0.1, 0.2, 0.25}) {
    s.checks.push_back(at_most("boundary xi=" + num(x),
                               std::abs(adjoint_bound_2s(0.5 + x, x) - 1.0 / x), 1e-6));
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double r = 0.05 + 2.0 * u(rng);
    const double a = r * (1.0 + u(rng));
    const cplx c(0.5 + a, 2.0 * u(rng));
    s.checks.push_back(
        at_least("sweep " + std::to_string(i), adjoint_bound_2s(c, r), 1.0 / xi(c, r) - 1e-9));
  }
  return s;
}

SuiteResult brevig(std::uint64_t) {
  SuiteResult s{"brevig", "||C_{phi_alpha}||^2 = 2/alpha for alpha <= alpha0", {}};
  for (double alpha : {0.5, 1.0, 1.4}) {
    const auto rep = suite_for_phi_alpha(alpha);
    const std::string at = "alpha=" + num(alpha);
    s.checks.push_back(
        at_most("lower = 2/alpha " + at, std::abs(rep.at("brevig_lower").value - 2.0 / alpha), 1e-9));
    s.checks.push_back(
        at_most("upper = 2/alpha " + at, std::abs(rep.at("brevig_upper").value - 2.0 / alpha), 1e-9));
    s.checks.push_back({"consistent " + at, rep.max_lower(), rep.min_upper(), rep.consistent()});
  }
  return s;
}

SuiteResult newupper(std::uint64_t) {
  SuiteResult s{"newupper", "(zeta(1+2 xi) + zeta(1+xi))/2 < zeta(1+xi) for xi >= alpha0", {}};
  for (double x : {1.5, 2.0, 3.0}) {
    const auto rep = bound_suite(AffineSymbol(0.5 + x, {x}));
    const auto& e = rep.at("newupper");
    s.checks.push_back({"applicable xi=" + num(x), e.applicable ? 1.0 : 0.0, 1.0, e.applicable});
    s.checks.push_back(at_least("margin xi=" + num(x), zeta(1.0 + x) - e.value, 1e-3));
    s.checks.push_back({"consistent xi=" + num(x), rep.max_lower(), rep.min_upper(),
                        rep.consistent()});
  }
  return s;
}

SuiteResult pointeval(std::uint64_t) {
  SuiteResult s{"pointeval", "||C_phi||^2 > zeta(2 Re c) strictly for non-constant phi", {}};
  const AffineSymbol phi(1.5, {1.0});
  const double best = std::max(adjoint_bound_2s(1.5, 1.0), sigma_max_sq(build_matrix(phi, 64, 40)));
  s.checks.push_back(at_least("3/2 + 2^{-s} gap", best - zeta(3.0), 1e-3));
  return s;
}

SuiteResult subordination(std::uint64_t seed) {
  SuiteResult s{"subordination", "b majorized by c implies ||C_{phi_b} f|| <= ||C_{phi_c} f||", {}};
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int strict = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + trial % 4;
    const double r = 0.3 + u(rng);
    const double c = 0.5 + r + 0.3 * u(rng);
    const auto cv = random_coeffs(rng, d, r);
    const auto bv = random_majorized(rng, cv);
    const auto parts = bvn_decompose(CoeffVector(bv), CoeffVector(cv));
    const auto rebuilt = apply_decomposition(parts, CoeffVector(cv));
    double residual = 0.0;
    for (std::size_t i = 0; i < d; ++i) residual = std::max(residual, std::abs(rebuilt[i] - bv[i]));
    const auto f = random_poly(rng, 5);
    const double nb = comp_norm_sq(AffineSymbol(c, bv), f);
    const double nc = comp_norm_sq(AffineSymbol(c, cv), f);
    const std::string at = std::to_string(trial);
    s.checks.push_back(at_most("bvn residual " + at, residual, 1e-10));
    s.checks.push_back(at_most("norm ordering " + at, nb, nc + 1e-9));
    if (nc - nb > 0.0) ++strict;
  }
  s.checks.push_back(at_least("strict gaps", strict, 20));
  return s;
}

SuiteResult carleson(std::uint64_t seed) {
  SuiteResult s{"carleson", "E_chi |f(phi*(chi))|^2 = ||C_phi f||^2", {}};
  // Family-wise 95% over the 10 fixtures.
  constexpr double kBonferroni = 2.807 / 1.96;
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const double r = 0.2 + u(rng);
    const AffineSymbol phi(cplx(0.5 + r + 0.3 * u(rng), u(rng)), random_coeffs(rng, d, r));
    const auto f = random_poly(rng, 4);
    const auto m = carleson_mean(phi, f, SamplePlan{200000, seed + trial});
    s.checks.push_back(at_most("fixture " + std::to_string(trial),
                               std::abs(m.estimate - comp_norm_sq(phi, f)), kBonferroni * m.ci95));
  }
  return s;
}

SuiteResult shapiro(std::uint64_t seed) {
  SuiteResult s{"shapiro", "C_delta = (1/2)(1-delta)/(1+delta) m(E_delta) on the single-prime example",
                {}};
  const auto& phi = std::get<PolySymbol>(find_fixture("single-prime-disc").data);
  const double delta = std::sqrt(5.0 / 8.0);
  const auto m = measure_E_delta(phi, delta, SamplePlan{1000000, seed});
  const double expected = (13.0 - 4.0 * std::sqrt(10.0)) / 18.0;
  s.checks.push_back(at_most("measure = 1/3", std::abs(m.estimate - 1.0 / 3.0), m.ci95));
  s.checks.push_back(at_most("constant", std::abs(shapiro_factor(delta) * m.estimate - expected),
                             2e-3));
  return s;
}

SuiteResult z2z(std::uint64_t seed) {
  SuiteResult s{"z2z", "||f o z/(2-z)||^2 <= (|f(0)|^2 + ||f||^2)/2, sharp", {}};
  Rng rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_series(rng, 256);
    const double bound = (std::norm(f[0]) + f.norm_sq()) / 2.0;
    s.checks.push_back(
        at_most("random " + std::to_string(trial), psi_apply(f, 256).norm_sq(), bound + 1e-10));
  }
  const auto f = PowerSeries::geometric(0.99, 2000);
  const double ratio = psi_apply(f, 2000).norm_sq() / ((1.0 + f.norm_sq()) / 2.0);
  s.checks.push_back(at_least("1/(1 - 0.99 z) ratio", ratio, 0.95));
  s.checks.push_back(at_most("1/(1 - 0.99 z) ratio <= 1", ratio, 1.0));
  return s;
}

SuiteResult littlewood(std::uint64_t seed) {
  SuiteResult s{"littlewood", "||f o phi|| <= ||f|| for self-maps fixing 0, equality for z^m", {}};
  Rng rng(seed);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned deg = 1 + trial % 4;
    auto p = random_series(rng, deg);
    double l1 = 0.0;
    for (unsigned k = 0; k <= deg; ++k) l1 += std::abs(p[k]);
    std::vector<cplx> c(deg + 2);
    for (unsigned k = 0; k <= deg; ++k) c[k + 1] = p[k] / l1;
    const auto f = random_series(rng, 8);
    const auto res = littlewood_check(PowerSeries(c), f, 8 * (deg + 1));
    s.checks.push_back({"random " + std::to_string(trial), res.lhs, res.rhs, res.ok});
  }
  const auto f = random_series(rng, 10);
  for (unsigned m : {1u, 2u, 3u}) {
    const auto res = littlewood_check(PowerSeries::monomial(m), f, 10 * m);
    s.checks.push_back(at_most("z^" + std::to_string(m) + " isometry", std::abs(res.lhs - res.rhs),
                               1e-10 * res.rhs));
  }
  return s;
}

SuiteResult inner(std::uint64_t seed) {
  SuiteResult s{"inner", "inner symbols into D(c, r) attain ||C_psi f||, psi = c + r 2^{-s}", {}};
  const auto& p = std::get<InnerSymbolParams>(find_fixture("inner-symbol").data);
  const AffineSymbol psi(p.c, {p.r});
  const DirichletPoly f{{1, 1.0}, {2, cplx(0.5, 0.5)}, {3, -0.4}, {6, 0.3}};
  const double target = comp_norm_sq(psi, f);
  // 99.9% band; ci95 is a 1.96-sigma half width.
  const auto boundary = inner_carleson_mean(p, f, 1e-8, SamplePlan{1000000, seed});
  s.checks.push_back(at_most("equality at the boundary", std::abs(boundary.estimate - target),
                             3.29 / 1.96 * boundary.ci95));
  const auto inside = inner_carleson_mean(p, f, 0.5, SamplePlan{200000, seed});
  s.checks.push_back(at_most("inequality inside", inside.estimate, target + inside.ci95));
  return s;
}

SuiteResult consistency(std::uint64_t seed) {
  SuiteResult s{"consistency", "max(lower bounds) <= min(upper bounds)", {}};
  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 1 + i % 3;
    const double r = 0.05 + 2.0 * u(rng);
    const double a = r * (i % 5 == 0 ? 1.0 : 1.0 + 2.0 * u(rng)) * (1 + 1e-14);
    const auto rep = bound_suite(AffineSymbol(cplx(0.5 + a, u(rng)), random_coeffs(rng, d, r)), 16, 24);
    s.checks.push_back({"point " + std::to_string(i), rep.max_lower(), rep.min_upper(),
                        rep.consistent()});
  }
  return s;
}

using SuiteFn = std::function<SuiteResult(std::uint64_t)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"dkzeta", dkzeta},       {"riemann", riemann},
      {"alpha0", alpha0_suite}, {"multinomial", multinomial},
      {"adjoint", adjoint},     {"brevig", brevig},
      {"newupper", newupper},   {"pointeval", pointeval},
      {"subordination", subordination}, {"carleson", carleson},
      {"shapiro", shapiro},     {"z2z", z2z},
      {"littlewood", littlewood}, {"inner", inner},
      {"consistency", consistency}};
  return r;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "dkzeta", "riemann",   "alpha0",   "multinomial", "adjoint", "brevig",     "newupper",
      "pointeval", "subordination", "carleson", "shapiro", "z2z", "littlewood", "inner",
      "consistency"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw PreconditionError("unknown suite: " + name);
  return it->second(seed);
}

}  // namespace compnorm
