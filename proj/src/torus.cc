#include "compnorm/torus.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "compnorm/errors.h"
#include "compnorm/primes.h"
#include "parallel.h"

namespace compnorm {

namespace {

constexpr std::size_t kChunks = 64;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Smallest d with n supported on the first d primes.
std::size_t prime_span(std::uint64_t n, std::vector<int>& exponents) {
  for (std::size_t d = 0;; ++d) {
    if (factor_over_first_primes(n, d, exponents)) return d;
  }
}

// A polynomial tail in exponent-vector form: sum_n a_n exp(i <e_n, theta>).
struct LatticeTerms {
  std::vector<cplx> a;
  std::vector<std::vector<int>> exponents;
  std::vector<double> log_n;
  std::size_t dim = 0;
};

LatticeTerms lattice_terms(const DirichletPoly& tail) {
  LatticeTerms out;
  for (const auto& [n, a] : tail.coeffs()) {
    std::vector<int> e;
    out.dim = std::max(out.dim, prime_span(n, e));
    out.a.push_back(a);
    out.exponents.push_back(std::move(e));
    out.log_n.push_back(std::log(double(n)));
  }
  for (auto& e : out.exponents) e.resize(out.dim, 0);
  return out;
}

cplx tail_at_angles(const LatticeTerms& terms, const std::vector<double>& theta) {
  cplx s{};
  for (std::size_t i = 0; i < terms.a.size(); ++i) {
    double phase = 0.0;
    for (std::size_t j = 0; j < terms.dim; ++j) phase += terms.exponents[i][j] * theta[j];
    s += terms.a[i] * std::polar(1.0, phase);
  }
  return s;
}

cplx tail_on_line(const LatticeTerms& terms, double t) {
  cplx s{};
  for (std::size_t i = 0; i < terms.a.size(); ++i) {
    s += terms.a[i] * std::polar(1.0, -t * terms.log_n[i]);
  }
  return s;
}

void check_plan(const SamplePlan& plan, const char* who) {
  if (plan.n_samples < 1) throw PreconditionError(std::string(who) + ": n_samples must be >= 1");
}

void check_delta(double delta, const char* who) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw PreconditionError(std::string(who) + ": delta must lie in [0, 1]");
  }
}

double ci95_binomial(double p, std::uint64_t n) {
  return 1.96 * std::sqrt(p * (1.0 - p) / double(n));
}

}  // namespace

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  const std::uint64_t key = splitmix_finalize(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
  return splitmix_finalize(key ^ splitmix_finalize(counter + 0x632be59bd9b4e019ULL));
}

double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return double(counter_hash(seed, stream, counter) >> 11) * 0x1.0p-53;
}

Character sample_character(const SamplePlan& plan, std::size_t d, std::uint64_t index) {
  std::vector<double> theta(d);
  for (std::size_t j = 0; j < d; ++j) theta[j] = kTwoPi * counter_uniform(plan.seed, j, index);
  return Character::from_angles(theta);
}

PolySymbol::PolySymbol(cplx c, DirichletPoly tail, double r)
    : c_(c), tail_(std::move(tail)), r_(r) {
  if (!(r > 0.0)) throw PreconditionError("PolySymbol: r must be positive");
  if (tail_.coeff(1) != cplx{}) {
    throw PreconditionError("PolySymbol: the tail must not have a constant term");
  }
  dim_ = lattice_terms(tail_).dim;
}

PolySymbol::PolySymbol(const AffineSymbol& phi)
    : PolySymbol(phi.c(), phi.linear_part(), phi.r()) {
  dim_ = std::max(dim_, phi.d());
}

cplx boundary_value(const AffineSymbol& phi, const Character& chi) {
  if (chi.dimension() < phi.d()) {
    throw DomainError("boundary_value: character covers too few coordinates");
  }
  cplx v = phi.c();
  for (std::size_t j = 0; j < phi.d(); ++j) v += phi.coeffs()[j] * phi.twist()[j] * chi[j];
  return v;
}

cplx boundary_value(const PolySymbol& phi, const Character& chi) {
  if (chi.dimension() < phi.torus_dimension()) {
    throw DomainError("boundary_value: character covers too few coordinates");
  }
  cplx v = phi.c();
  for (const auto& [n, a] : phi.tail().coeffs()) v += a * chi(n);
  return v;
}

cplx value_on_line(const PolySymbol& phi, double t) {
  return phi.c() + tail_on_line(lattice_terms(phi.tail()), t);
}

MeasureEstimate measure_E_delta(const PolySymbol& phi, double delta, const SamplePlan& plan) {
  check_plan(plan, "measure_E_delta");
  check_delta(delta, "measure_E_delta");
  const auto terms = lattice_terms(phi.tail());
  const std::size_t d = std::max(plan.d, terms.dim);
  const double radius = delta * phi.r();

  std::vector<std::uint64_t> hits(kChunks, 0);
  detail::parallel_chunks(plan.n_samples, kChunks, [&](std::size_t chunk, std::size_t begin,
                                                       std::size_t end) {
    std::vector<double> theta(d);
    std::uint64_t count = 0;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < d; ++j) theta[j] = kTwoPi * counter_uniform(plan.seed, j, i);
      if (std::abs(tail_at_angles(terms, theta)) < radius) ++count;
    }
    hits[chunk] = count;
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  const double p = double(total) / double(plan.n_samples);
  return {p, ci95_binomial(p, plan.n_samples), plan.n_samples, plan.seed};
}

MeasureEstimate measure_E_delta(const AffineSymbol& phi, double delta, const SamplePlan& plan) {
  if (phi.is_constant()) throw PreconditionError("measure_E_delta: r must be positive");
  return measure_E_delta(PolySymbol(phi), delta, plan);
}

double shapiro_factor(double delta) {
  check_delta(delta, "shapiro_factor");
  return 0.5 * (1.0 - delta) / (1.0 + delta);
}

double shapiro_constant(const PolySymbol& phi, double delta, const SamplePlan& plan) {
  return shapiro_factor(delta) * measure_E_delta(phi, delta, plan).estimate;
}

double shapiro_constant(const AffineSymbol& phi, double delta, const SamplePlan& plan) {
  return shapiro_factor(delta) * measure_E_delta(phi, delta, plan).estimate;
}

double ergodic_measure(const PolySymbol& phi, double delta, double T, long steps) {
  check_delta(delta, "ergodic_measure");
  if (!(T > 0.0)) throw PreconditionError("ergodic_measure: T must be positive");
  if (steps < 2) throw PreconditionError("ergodic_measure: steps must be >= 2");
  const auto terms = lattice_terms(phi.tail());
  const double radius = delta * phi.r();
  std::vector<long> hits(kChunks, 0);
  detail::parallel_chunks(std::size_t(steps), kChunks,
                          [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                            long count = 0;
                            for (std::size_t i = begin; i < end; ++i) {
                              const double t = -T + 2.0 * T * double(i) / double(steps - 1);
                              if (std::abs(tail_on_line(terms, t)) < radius) ++count;
                            }
                            hits[chunk] = count;
                          });
  long total = 0;
  for (auto h : hits) total += h;
  return double(total) / double(steps);
}

double ergodic_measure(const AffineSymbol& phi, double delta, double T, long steps) {
  if (phi.is_constant()) throw PreconditionError("ergodic_measure: r must be positive");
  return ergodic_measure(PolySymbol(phi), delta, T, steps);
}

std::vector<CurvePoint> curve_trace(const PolySymbol& phi, double t_min, double t_max,
                                    long steps) {
  if (steps < 2) throw PreconditionError("curve_trace: steps must be >= 2");
  if (!(t_max > t_min)) throw PreconditionError("curve_trace: need t_min < t_max");
  const auto terms = lattice_terms(phi.tail());
  std::vector<CurvePoint> out(steps);
  detail::parallel_chunks(std::size_t(steps), kChunks,
                          [&](std::size_t, std::size_t begin, std::size_t end) {
                            for (std::size_t i = begin; i < end; ++i) {
                              const double t =
                                  t_min + (t_max - t_min) * double(i) / double(steps - 1);
                              const cplx v = phi.c() + tail_on_line(terms, t);
                              out[i] = {t, v.real(), v.imag()};
                            }
                          });
  return out;
}

std::vector<CurvePoint> curve_trace(const AffineSymbol& phi, double t_min, double t_max,
                                    long steps) {
  if (phi.is_constant()) {
    if (steps < 2) throw PreconditionError("curve_trace: steps must be >= 2");
    std::vector<CurvePoint> out(steps);
    for (long i = 0; i < steps; ++i) {
      out[i] = {t_min + (t_max - t_min) * double(i) / double(steps - 1), phi.c().real(),
                phi.c().imag()};
    }
    return out;
  }
  return curve_trace(PolySymbol(phi), t_min, t_max, steps);
}

Annulus trace_extremes(const std::vector<CurvePoint>& trace, cplx c) {
  if (trace.empty()) throw PreconditionError("trace_extremes: empty trace");
  Annulus a{INFINITY, 0.0};
  for (const auto& p : trace) {
    const double m = std::abs(cplx(p.re, p.im) - c);
    a.inner = std::min(a.inner, m);
    a.outer = std::max(a.outer, m);
  }
  return a;
}

namespace {

// Mean and 95% half-width of |f(w_i)|^2 with w_i = point(i).
template <typename Point>
MeasureEstimate mean_of_f_sq(const DirichletPoly& f, const SamplePlan& plan, Point point) {
  std::vector<double> logs;
  std::vector<cplx> coeffs;
  for (const auto& [n, a] : f.coeffs()) {
    logs.push_back(std::log(double(n)));
    coeffs.push_back(a);
  }
  std::vector<double> sum(kChunks, 0.0), sum_sq(kChunks, 0.0);
  detail::parallel_chunks(plan.n_samples, kChunks, [&](std::size_t chunk, std::size_t begin,
                                                       std::size_t end) {
    double s = 0.0, s2 = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const cplx w = point(i);
      cplx v{};
      for (std::size_t k = 0; k < coeffs.size(); ++k) v += coeffs[k] * std::exp(-w * logs[k]);
      const double x = std::norm(v);
      s += x;
      s2 += x * x;
    }
    sum[chunk] = s;
    sum_sq[chunk] = s2;
  });
  double s = 0.0, s2 = 0.0;
  for (std::size_t c = 0; c < kChunks; ++c) {
    s += sum[c];
    s2 += sum_sq[c];
  }
  const double n = double(plan.n_samples);
  const double mean = s / n;
  const double var = n > 1 ? std::max(0.0, (s2 - n * mean * mean) / (n - 1.0)) : 0.0;
  return {mean, 1.96 * std::sqrt(var / n), plan.n_samples, plan.seed};
}

}  // namespace

MeasureEstimate carleson_mean(const AffineSymbol& phi, const DirichletPoly& f,
                              const SamplePlan& plan) {
  check_plan(plan, "carleson_mean");
  return mean_of_f_sq(f, plan, [&](std::uint64_t i) {
    cplx w = phi.c();
    for (std::size_t j = 0; j < phi.d(); ++j) {
      w += phi.coeffs()[j] * phi.twist()[j] *
           std::polar(1.0, kTwoPi * counter_uniform(plan.seed, j, i));
    }
    return w;
  });
}

void validate(const InnerSymbolParams& params) {
  if (params.lambdas.size() != params.thetas.size()) {
    throw PreconditionError("InnerSymbolParams: lambdas and thetas differ in length");
  }
  for (double l : params.lambdas) {
    if (!(l >= 0.0) || !std::isfinite(l)) {
      throw PreconditionError("InnerSymbolParams: lambdas must be finite and >= 0");
    }
  }
  if (!(params.omitted_lambda >= 0.0)) {
    throw PreconditionError("InnerSymbolParams: omitted_lambda must be >= 0");
  }
  if (!(params.r > 0.0) || !(params.c.real() - 0.5 >= params.r)) {
    throw PreconditionError("InnerSymbolParams: need Re c - 1/2 >= r > 0");
  }
}

cplx inner_value(const InnerSymbolParams& params, const Character& chi, double sigma) {
  validate(params);
  if (!(sigma > 0.0)) throw DomainError("inner_value: sigma must be positive");
  const std::size_t J = params.lambdas.size();
  if (chi.dimension() < J) throw DomainError("inner_value: character covers too few coordinates");
  const auto primes = first_primes(J);
  cplx exponent{};
  for (std::size_t j = 0; j < J; ++j) {
    const cplx e = std::polar(1.0, params.thetas[j]);
    const cplx z = chi[j] * std::exp(-sigma * std::log(double(primes[j])));
    const cplx gap = e - z;
    if (std::abs(gap) < 1e-12) throw DomainError("inner_value: too close to a pole");
    exponent += params.lambdas[j] * (e + z) / gap;
  }
  return std::exp(-exponent);
}

double inner_boundary_modulus(const InnerSymbolParams& params, const Character& chi,
                              double sigma) {
  return std::abs(inner_value(params, chi, sigma));
}

double inner_value_at_infinity(const InnerSymbolParams& params) {
  double s = 0.0;
  for (double l : params.lambdas) s += l;
  return std::exp(-s);
}

double inner_truncation_bound(const InnerSymbolParams& params, double sigma) {
  validate(params);
  if (!(sigma > 0.0)) throw DomainError("inner_truncation_bound: sigma must be positive");
  if (params.omitted_lambda == 0.0) return 0.0;
  const double x = std::pow(double(nth_prime(params.lambdas.size() + 1)), -sigma);
  return 2.0 * params.omitted_lambda / (1.0 - x);
}

cplx mobius_symbol_value(const InnerSymbolParams& params, const Character& chi, double sigma) {
  const cplx g = inner_value(params, chi, sigma);
  const double g_inf = inner_value_at_infinity(params);
  return params.c + params.r * (g - g_inf) / (1.0 - g_inf * g);
}

MeasureEstimate inner_carleson_mean(const InnerSymbolParams& params, const DirichletPoly& f,
                                    double sigma, const SamplePlan& plan) {
  check_plan(plan, "inner_carleson_mean");
  validate(params);
  const std::size_t J = params.lambdas.size();
  return mean_of_f_sq(f, plan, [&](std::uint64_t i) {
    return mobius_symbol_value(params, sample_character(plan, J, i), sigma);
  });
}

}  // namespace compnorm
