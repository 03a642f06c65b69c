#include "compnorm/disc.h"

#include <cmath>
#include <numbers>

#include "compnorm/errors.h"
#include "parallel.h"

namespace compnorm {

namespace {

constexpr unsigned kSelfMapSamples = 4096;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <typename Map>
void check_self_map_impl(const Map& phi, const char* who) {
  if (!(std::abs(phi(0.0)) < 1.0)) throw DomainError(std::string(who) + ": |phi(0)| >= 1");
  for (unsigned i = 0; i < kSelfMapSamples; ++i) {
    const cplx z = std::polar(1.0, kTwoPi * i / kSelfMapSamples);
    if (!(std::abs(phi(z)) <= 1.0 + 1e-9)) {
      throw DomainError(std::string(who) + ": phi does not map the disc into itself");
    }
  }
}

// p * q truncated at degree N.
std::vector<cplx> mul_trunc(const std::vector<cplx>& p, const std::vector<cplx>& q, unsigned N) {
  std::vector<cplx> out(std::min<std::size_t>(N + 1, p.size() + q.size() - 1));
  for (std::size_t i = 0; i < p.size() && i < out.size(); ++i) {
    if (p[i] == cplx{}) continue;
    for (std::size_t j = 0; j < q.size() && i + j < out.size(); ++j) out[i + j] += p[i] * q[j];
  }
  return out;
}

template <typename Map>
ShapiroCheck shapiro_impl(const Map& phi, double delta, const PowerSeries& f,
                          unsigned samples, const PowerSeries& image) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw PreconditionError("shapiro_bound_check: delta must lie in [0, 1]");
  }
  if (samples < 2) throw PreconditionError("shapiro_bound_check: need >= 2 boundary samples");
  unsigned inside = 0, crossings = 0;
  bool first = false, prev = false;
  for (unsigned i = 0; i < samples; ++i) {
    const bool in = std::abs(phi(std::polar(1.0, kTwoPi * i / samples))) < delta;
    inside += in;
    if (i == 0) first = in;
    else if (in != prev) ++crossings;
    prev = in;
  }
  if (prev != first) ++crossings;

  ShapiroCheck out;
  const double factor = 0.5 * (1.0 - delta) / (1.0 + delta);
  out.measure = double(inside) / samples;
  out.sampling_error = double(crossings) / samples;
  out.c_delta = factor * out.measure;
  const double f0 = std::norm(f[0]);
  const double fn = f.norm_sq();
  out.lhs = image.norm_sq();
  out.rhs = out.c_delta * f0 + (1.0 - out.c_delta) * fn;
  out.ok = out.lhs <= out.rhs + 1e-6 + factor * out.sampling_error * (fn - f0);
  return out;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

PowerSeries PowerSeries::monomial(unsigned k, cplx a) {
  std::vector<cplx> c(k + 1);
  c[k] = a;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::geometric(cplx q, unsigned N) {
  std::vector<cplx> c(N + 1);
  cplx x = 1.0;
  for (auto& v : c) {
    v = x;
    x *= q;
  }
  return PowerSeries(std::move(c));
}

double PowerSeries::norm_sq() const {
  double s = 0.0;
  for (const auto& a : coeffs_) s += std::norm(a);
  return s;
}

cplx PowerSeries::operator()(cplx z) const {
  cplx v{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * z + *it;
  return v;
}

RationalMap psi_map() { return {PowerSeries({0.0, 1.0}), PowerSeries({2.0, -1.0})}; }

PowerSeries taylor(const RationalMap& phi, unsigned N) {
  const auto& q = phi.den.coeffs();
  if (q[0] == cplx{}) throw DomainError("taylor: denominator vanishes at 0");
  // q * t = p, solved degree by degree.
  std::vector<cplx> t(N + 1);
  for (unsigned k = 0; k <= N; ++k) {
    cplx s = phi.num[k];
    for (unsigned i = 1; i <= k && i < q.size(); ++i) s -= q[i] * t[k - i];
    t[k] = s / q[0];
  }
  return PowerSeries(std::move(t));
}

void check_self_map(const PowerSeries& phi) { check_self_map_impl(phi, "check_self_map"); }
void check_self_map(const RationalMap& phi) { check_self_map_impl(phi, "check_self_map"); }

PowerSeries compose_truncated(const PowerSeries& f, const PowerSeries& phi, unsigned N) {
  check_self_map(phi);
  const auto& a = f.coeffs();
  std::vector<cplx> p(phi.coeffs().begin(),
                      phi.coeffs().begin() + std::min<std::size_t>(N + 1, phi.coeffs().size()));
  std::vector<cplx> acc{a.back()};
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    acc = mul_trunc(acc, p, N);
    acc[0] += a[k];
  }
  acc.resize(N + 1);
  return PowerSeries(std::move(acc));
}

PowerSeries compose_truncated(const PowerSeries& f, const RationalMap& phi, unsigned N) {
  check_self_map(phi);
  return compose_truncated(f, taylor(phi, N), N);
}

std::vector<std::vector<double>> psi_matrix(unsigned N) {
  if (N < 1) throw PreconditionError("psi_matrix: N must be >= 1");
  std::vector<std::vector<double>> m(N + 1, std::vector<double>(N + 1, 0.0));
  m[0][0] = 1.0;
  // 2^{-j} binom(j-1, k-1) = (row j-1 at k + row j-1 at k-1) / 2, seeded by (1, 1) = 1/2.
  m[1][1] = 0.5;
  for (unsigned j = 2; j <= N; ++j) {
    for (unsigned k = 1; k <= j; ++k) m[j][k] = 0.5 * (m[j - 1][k] + m[j - 1][k - 1]);
  }
  return m;
}

PowerSeries psi_apply(const PowerSeries& f, unsigned N) {
  if (N < 1) throw PreconditionError("psi_apply: N must be >= 1");
  std::vector<cplx> out(N + 1);
  out[0] = f[0];
  std::vector<double> row(N + 1, 0.0), next(N + 1, 0.0);
  row[1] = 0.5;
  for (unsigned j = 1; j <= N; ++j) {
    if (j > 1) {
      for (unsigned k = 1; k <= j; ++k) next[k] = 0.5 * (row[k] + row[k - 1]);
      std::swap(row, next);
    }
    cplx s{};
    for (unsigned k = 1; k <= j && k <= f.degree(); ++k) s += row[k] * f[k];
    out[j] = s;
  }
  return PowerSeries(std::move(out));
}

double mobius_comp_norm_sq(cplx w) {
  const double a = std::abs(w);
  if (!(a < 1.0)) throw DomainError("mobius_comp_norm_sq: need |w| < 1");
  return (1.0 + a) / (1.0 - a);
}

NormComparison littlewood_check(const PowerSeries& phi, const PowerSeries& f, unsigned N) {
  if (std::abs(phi[0]) > 1e-14) throw PreconditionError("littlewood_check: need phi(0) = 0");
  const double lhs = compose_truncated(f, phi, N).norm_sq();
  const double rhs = f.norm_sq();
  return {lhs, rhs, lhs <= rhs + 1e-9};
}

ShapiroCheck shapiro_bound_check(const PowerSeries& phi, double delta, const PowerSeries& f,
                                 unsigned boundary_samples, unsigned N) {
  if (std::abs(phi[0]) > 1e-14) throw PreconditionError("shapiro_bound_check: need phi(0) = 0");
  return shapiro_impl(phi, delta, f, boundary_samples, compose_truncated(f, phi, N));
}

ShapiroCheck shapiro_bound_check(const RationalMap& phi, double delta, const PowerSeries& f,
                                 unsigned boundary_samples, unsigned N) {
  if (std::abs(phi(0.0)) > 1e-14) throw PreconditionError("shapiro_bound_check: need phi(0) = 0");
  return shapiro_impl(phi, delta, f, boundary_samples, compose_truncated(f, phi, N));
}

}  // namespace compnorm
