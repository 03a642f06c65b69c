#include "compnorm/zeta.h"

#include <array>
#include <cmath>
#include <set>

#include "compnorm/errors.h"
#include "compnorm/primes.h"

namespace compnorm {

namespace {

constexpr std::uint64_t kDirectBlock = 100;
constexpr int kBernoulliTerms = 8;

// B_{2j} / (2j)!, j = 1..8.
constexpr std::array<double, kBernoulliTerms> kBernoulliOverFactorial = {
    (1.0 / 6.0) / 2.0,
    (-1.0 / 30.0) / 24.0,
    (1.0 / 42.0) / 720.0,
    (-1.0 / 30.0) / 40320.0,
    (5.0 / 66.0) / 3628800.0,
    (-691.0 / 2730.0) / 479001600.0,
    (7.0 / 6.0) / 87178291200.0,
    (-3617.0 / 510.0) / 20922789888000.0,
};

// Value at x of P(log x) x^{-a}, with P given by its coefficients.
double eval_log_poly(const std::vector<double>& p, double log_x, double a) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * log_x + *it;
  return acc * std::exp(-a * log_x);
}

// d/dx [P(log x) x^{-a}] = (P'(log x) - a P(log x)) x^{-a-1}.
void differentiate(std::vector<double>& p, double& a) {
  std::vector<double> q(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[i] -= a * p[i];
    if (i > 0) q[i - 1] += static_cast<double>(i) * p[i];
  }
  p = std::move(q);
  a += 1.0;
}

// int_N^inf (log x)^k x^{-sigma} dx
//   = k! N^{1-sigma} sum_{i=0}^{k} (log N)^i / (i! (sigma-1)^{k+1-i}).
double log_power_integral(unsigned k, double s1, double big_n) {
  const double log_n = std::log(big_n);
  double sum = 0.0;
  double k_fact = 1.0;
  for (unsigned i = 1; i <= k; ++i) k_fact *= i;
  double pow_s1 = std::pow(s1, static_cast<double>(k + 1));
  double log_pow = 1.0;
  double i_fact = 1.0;
  for (unsigned i = 0; i <= k; ++i) {
    if (i > 0) {
      log_pow *= log_n;
      i_fact *= i;
      pow_s1 /= s1;
    }
    sum += log_pow / (i_fact * pow_s1);
  }
  return k_fact * std::exp(-s1 * log_n) * sum;
}

void check_sigma(double sigma, const char* who) {
  if (!(sigma > 1.0) || !std::isfinite(sigma)) {
    throw DomainError(std::string(who) + ": sigma must be a finite real > 1");
  }
}

}  // namespace

namespace {

// sum_{n >= m} (log n)^k n^{-1-s1}; s1 > 0 is passed separately so that
// arguments just above 1 keep their full relative precision.
double shifted_tail(unsigned k, double s1, std::uint64_t m) {
  if (!(s1 > 0.0) || !std::isfinite(s1)) {
    throw DomainError("zeta: sigma must be a finite real > 1");
  }
  if (m == 0) throw PreconditionError("zeta: tail start must be >= 1");
  const double sigma = 1.0 + s1;
  const std::uint64_t big_n = m + kDirectBlock + 8ull * k;

  double direct = 0.0;
  for (std::uint64_t n = big_n - 1; n >= m; --n) {
    const double log_n = std::log(static_cast<double>(n));
    direct += std::pow(log_n, static_cast<double>(k)) * std::exp(-sigma * log_n);
    if (n == m) break;
  }

  const double x = static_cast<double>(big_n);
  const double log_x = std::log(x);
  std::vector<double> poly(k + 1, 0.0);
  poly[k] = 1.0;
  double a = sigma;
  double tail = log_power_integral(k, s1, x) + 0.5 * eval_log_poly(poly, log_x, a);
  // Euler-Maclaurin: - sum_j B_{2j}/(2j)! f^{(2j-1)}(N).
  differentiate(poly, a);
  for (int j = 0; j < kBernoulliTerms; ++j) {
    tail -= kBernoulliOverFactorial[j] * eval_log_poly(poly, log_x, a);
    differentiate(poly, a);
    differentiate(poly, a);
  }
  return direct + tail;
}

}  // namespace

double log_power_tail(unsigned k, double sigma, std::uint64_t m) {
  check_sigma(sigma, "log_power_tail");
  return shifted_tail(k, sigma - 1.0, m);
}

double zeta_1p(double eps) { return shifted_tail(0, eps, 1); }

double hurwitz_tail_1p(double eps, std::uint64_t m) { return shifted_tail(0, eps, m); }

double hurwitz_tail(double sigma, std::uint64_t m) {
  return log_power_tail(0, sigma, m);
}

double zeta(double sigma) {
  check_sigma(sigma, "zeta");
  return log_power_tail(0, sigma, 1);
}

double zeta_deriv(unsigned k, double sigma) {
  if (k > kMaxZetaDerivOrder) {
    throw PreconditionError("zeta_deriv: k must be at most 12");
  }
  check_sigma(sigma, "zeta_deriv");
  return log_power_tail(k, sigma, 1);
}

void validate(const LambdaSpec& lambda) {
  if (const auto* tail = std::get_if<CofiniteTail>(&lambda)) {
    if (tail->m < 2) throw PreconditionError("CofiniteTail: m must be >= 2");
  } else if (const auto* geo = std::get_if<GeometricPowers>(&lambda)) {
    if (!is_prime(geo->p)) throw PreconditionError("GeometricPowers: p must be prime");
  } else if (const auto* semi = std::get_if<PrimeSemigroup>(&lambda)) {
    std::set<std::uint64_t> seen;
    for (auto p : semi->primes) {
      if (!is_prime(p)) throw PreconditionError("PrimeSemigroup: non-prime generator");
      if (!seen.insert(p).second) {
        throw PreconditionError("PrimeSemigroup: duplicate generator");
      }
    }
  }
}

double abscissa(const LambdaSpec& lambda) {
  return std::holds_alternative<FullIntegers>(lambda) ||
                 std::holds_alternative<CofiniteTail>(lambda)
             ? 1.0
             : 0.0;
}

bool contains(const LambdaSpec& lambda, std::uint64_t n) {
  if (n == 0) return false;
  if (n == 1) return true;
  if (std::holds_alternative<FullIntegers>(lambda)) return true;
  if (const auto* tail = std::get_if<CofiniteTail>(&lambda)) return n >= tail->m;
  if (const auto* geo = std::get_if<GeometricPowers>(&lambda)) {
    while (n % geo->p == 0) n /= geo->p;
    return n == 1;
  }
  const auto& semi = std::get<PrimeSemigroup>(lambda);
  for (auto p : semi.primes) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

double zeta_lambda(const LambdaSpec& lambda, double sigma) {
  validate(lambda);
  if (!(sigma > abscissa(lambda)) || !std::isfinite(sigma)) {
    throw DomainError("zeta_lambda: sigma must exceed the abscissa");
  }
  auto euler_factor = [sigma](std::uint64_t p) {
    return -1.0 / std::expm1(-sigma * std::log(static_cast<double>(p)));
  };
  if (std::holds_alternative<FullIntegers>(lambda)) return zeta(sigma);
  if (const auto* tail = std::get_if<CofiniteTail>(&lambda)) {
    return 1.0 + hurwitz_tail(sigma, tail->m);
  }
  if (const auto* geo = std::get_if<GeometricPowers>(&lambda)) {
    return euler_factor(geo->p);
  }
  double product = 1.0;
  for (auto p : std::get<PrimeSemigroup>(lambda).primes) product *= euler_factor(p);
  return product;
}

DkZetaSandwich dkzeta_sandwich(unsigned k, double sigma) {
  if (k < 1 || k > kMaxZetaDerivOrder) {
    throw PreconditionError("dkzeta_sandwich: k must be in 1..12");
  }
  check_sigma(sigma, "dkzeta_sandwich");
  double scale = std::pow(sigma - 1.0, -static_cast<double>(k));
  for (unsigned i = 2; i <= k; ++i) scale *= i;
  const double z = zeta(sigma);
  return {scale * (z - 1.0), zeta_deriv(k, sigma), scale * z};
}

RiemannSums riemann_sum_bounds(double sigma, std::uint64_t m) {
  check_sigma(sigma, "riemann_sum_bounds");
  if (m == 0) throw PreconditionError("riemann_sum_bounds: m must be >= 1");
  const double md = static_cast<double>(m);
  const double upper = std::pow(md, sigma - 1.0) * hurwitz_tail(sigma, m);
  return {upper - 1.0 / md, upper};
}

double alpha0() {
  auto g = [](double a) { return a * zeta(1.0 + a) - 2.0; };
  double lo = 1.0;
  double hi = 2.0;
  if (!(g(lo) < 0.0 && g(hi) > 0.0)) {
    throw ConvergenceError("alpha0: bracket [1, 2] does not enclose the root");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace compnorm
