#include "compnorm/composition.h"

#include <cmath>
#include <limits>
#include <map>

#include "compnorm/errors.h"

namespace compnorm {

std::vector<double> collision_moments(const std::vector<double>& u, unsigned K) {
  std::vector<double> w;
  for (double v : u) {
    if (v < 0.0) throw PreconditionError("collision_moments: negative weight");
    if (v > 0.0) w.push_back(v);
  }
  std::vector<double> f(K + 1, 0.0);
  f[0] = 1.0;
  if (w.empty()) return f;
  std::fill(f.begin(), f.end(), 1.0);
  if (w.size() == 1) return f;

  std::vector<double> log_fact(K + 1, 0.0);
  for (unsigned n = 1; n <= K; ++n) log_fact[n] = log_fact[n - 1] + std::log(double(n));

  // f holds the moments of the coordinates i+1.. conditioned on the mass left
  // after coordinate i; q is coordinate i's share of that remaining mass.
  double remaining = w.back();
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    remaining += w[i];
    const double q = std::min(1.0, w[i] / remaining);
    const double log_q = std::log(q);
    const double log_1q = std::log1p(-q);
    std::vector<double> next(K + 1, 0.0);
    for (unsigned n = 0; n <= K; ++n) {
      double acc = 0.0;
      for (unsigned j = 0; j <= n; ++j) {
        const double log_pmf = log_fact[n] - log_fact[j] - log_fact[n - j] +
                               j * log_q + (n - j) * log_1q;
        acc += std::exp(2.0 * log_pmf) * f[n - j];
      }
      next[n] = acc;
    }
    f = std::move(next);
  }
  return f;
}

std::vector<double> lattice_moments(const CoeffVector& c, unsigned K) {
  const double r = c.r();
  std::vector<double> u;
  for (double v : c.entries()) u.push_back(r > 0.0 ? v / r : 0.0);
  auto m = collision_moments(u, K);
  for (unsigned k = 1; k <= K; ++k) m[k] *= std::pow(r, 2.0 * k);
  return m;
}

namespace {

struct Term {
  cplx weight;   // a_n n^{-c}
  double bound;  // |a_n| n^{-Re c}
  double x;      // r log n
};

CompNorm sum_to_order(const std::vector<Term>& terms, const std::vector<double>& u,
                      unsigned K) {
  const auto m = collision_moments(u, K);
  std::vector<cplx> w;
  double max_x = 0.0;
  for (const auto& t : terms) {
    w.push_back(t.weight);
    max_x = std::max(max_x, t.x);
  }
  double value = 0.0;
  for (unsigned k = 0; k <= K; ++k) {
    cplx tk{};
    for (std::size_t i = 0; i < w.size(); ++i) {
      tk += w[i];
      w[i] *= -terms[i].x / double(k + 1);
    }
    value += std::norm(tk) * m[k];
  }

  // sum_{k > K} B_k^2 with B_k = sum |a_n| n^{-Re c} x_n^k / k!; the ratio
  // B_{k+1}/B_k is at most max_x/(k+1).
  const double rho = max_x / double(K + 2);
  double tail = std::numeric_limits<double>::infinity();
  if (rho < 1.0) {
    double b = 0.0;
    const double log_fact = std::lgamma(double(K + 2));
    for (const auto& t : terms) {
      if (t.x > 0.0 && t.bound > 0.0) {
        b += std::exp(std::log(t.bound) + double(K + 1) * std::log(t.x) - log_fact);
      }
    }
    tail = b * b / (1.0 - rho * rho);
  }
  return {value, tail, K};
}

}  // namespace

CompNorm comp_norm_sq_certified(const AffineSymbol& phi, const DirichletPoly& f,
                                unsigned k_max) {
  if (!in_gordon_hedenmalm(phi)) {
    throw DomainError("comp_norm_sq: symbol outside the Gordon-Hedenmalm class");
  }
  const cplx c = phi.c();
  if (phi.is_constant() || f.is_zero()) {
    return {std::norm(evaluate(f, c)), 0.0, 0};
  }
  const double r = phi.r();
  std::vector<Term> terms;
  for (const auto& [n, a] : f.coeffs()) {
    const double log_n = std::log(double(n));
    terms.push_back({a * std::exp(-c * log_n), std::abs(a) * std::exp(-c.real() * log_n),
                     r * log_n});
  }
  std::vector<double> u;
  for (double v : phi.coeffs().entries()) u.push_back(v / r);

  unsigned K = std::max(1u, std::min(k_max, kKMaxCap));
  for (;;) {
    const auto result = sum_to_order(terms, u, K);
    if (result.tail_bound < kCompTailTolerance) return result;
    if (K >= kKMaxCap) {
      throw ConvergenceError("comp_norm_sq: tail not certified below 1e-10 at K = 2000");
    }
    K = std::min(2 * K, kKMaxCap);
  }
}

double comp_norm_sq(const AffineSymbol& phi, const DirichletPoly& f, unsigned k_max) {
  return comp_norm_sq_certified(phi, f, k_max).value;
}

double comp_bruteforce_norm_sq(const AffineSymbol& phi, const DirichletPoly& f,
                               unsigned k_max) {
  if (!in_gordon_hedenmalm(phi)) {
    throw DomainError("comp_bruteforce_norm_sq: symbol outside the class");
  }
  const cplx c = phi.c();
  if (phi.is_constant()) return std::norm(evaluate(f, c));

  // Powers of L are kept on the prime lattice (exponent vectors) because the
  // integer index p^k overflows 64 bits long before the series converges.
  using Exponents = std::vector<unsigned>;
  const std::size_t d = phi.d();
  std::map<Exponents, cplx> l_pow{{Exponents(d, 0), 1.0}};
  std::map<Exponents, cplx> image;
  // Stop once sum |a_n| n^{-Re c} (r log n)^k / k! is negligible and
  // decreasing; every later Taylor term is then smaller still.
  const double r = phi.r();
  double max_x = 0.0;
  for (const auto& kv : f.coeffs()) max_x = std::max(max_x, r * std::log(double(kv.first)));
  double k_fact = 1.0;
  for (unsigned k = 0; k <= k_max; ++k) {
    if (k > max_x + 1.0) {
      double bound = 0.0;
      for (const auto& [n, a] : f.coeffs()) {
        const double log_n = std::log(double(n));
        // k_fact still holds (k-1)! here.
        bound += std::abs(a) * std::exp(-c.real() * log_n) * std::pow(r * log_n, k) /
                 (k_fact * double(k));
      }
      if (bound < 1e-13) break;
    }
    if (k > 0) {
      std::map<Exponents, cplx> next;
      for (const auto& [e, a] : l_pow) {
        for (std::size_t j = 0; j < d; ++j) {
          if (phi.coeffs()[j] == 0.0) continue;
          Exponents e2 = e;
          ++e2[j];
          next[e2] += a * phi.coeffs()[j] * phi.twist()[j];
        }
      }
      l_pow = std::move(next);
      k_fact *= k;
    }
    const cplx scale = derivative_at(f, k, c) / k_fact;
    if (scale == cplx{}) continue;
    for (const auto& [e, a] : l_pow) image[e] += scale * a;
  }
  double total = 0.0;
  for (const auto& kv : image) total += std::norm(kv.second);
  return total;
}

}  // namespace compnorm
