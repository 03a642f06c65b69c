#include "compnorm/dirichlet_poly.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "compnorm/character.h"
#include "compnorm/errors.h"

namespace compnorm {

namespace {

constexpr double kRelativeDropTolerance = 1e-15;

}  // namespace

DirichletPoly::DirichletPoly(Map coeffs) : coeffs_(std::move(coeffs)) {
  canonicalize();
}

DirichletPoly::DirichletPoly(
    std::initializer_list<std::pair<const std::uint64_t, cplx>> il)
    : coeffs_(il) {
  canonicalize();
}

DirichletPoly DirichletPoly::monomial(std::uint64_t n, cplx a) {
  return DirichletPoly(Map{{n, a}});
}

void DirichletPoly::canonicalize() {
  if (coeffs_.count(0) != 0) {
    throw PreconditionError("DirichletPoly: coefficient index must be >= 1");
  }
  double max_abs = 0.0;
  for (const auto& [n, a] : coeffs_) max_abs = std::max(max_abs, std::abs(a));
  const double cutoff = kRelativeDropTolerance * max_abs;
  std::erase_if(coeffs_, [cutoff](const auto& kv) {
    const double m = std::abs(kv.second);
    return m == 0.0 || m < cutoff;
  });
}

cplx DirichletPoly::coeff(std::uint64_t n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? cplx{} : it->second;
}

std::uint64_t DirichletPoly::max_index() const {
  return coeffs_.empty() ? 1 : coeffs_.rbegin()->first;
}

DirichletPoly& DirichletPoly::operator+=(const DirichletPoly& other) {
  for (const auto& [n, a] : other.coeffs_) coeffs_[n] += a;
  canonicalize();
  return *this;
}

DirichletPoly& DirichletPoly::operator*=(cplx scalar) {
  for (auto& kv : coeffs_) kv.second *= scalar;
  canonicalize();
  return *this;
}

DirichletPoly operator+(DirichletPoly lhs, const DirichletPoly& rhs) {
  lhs += rhs;
  return lhs;
}

DirichletPoly operator*(DirichletPoly lhs, cplx scalar) {
  lhs *= scalar;
  return lhs;
}

DirichletPoly operator*(cplx scalar, DirichletPoly rhs) {
  rhs *= scalar;
  return rhs;
}

double h2_norm_sq(const DirichletPoly& f) {
  double sum = 0.0;
  for (const auto& [n, a] : f.coeffs()) sum += std::norm(a);
  return sum;
}

DirichletPoly multiply(const DirichletPoly& f, const DirichletPoly& g) {
  std::unordered_map<std::uint64_t, cplx> acc;
  acc.reserve(f.support_size() * g.support_size());
  for (const auto& [u, a] : f.coeffs()) {
    for (const auto& [v, b] : g.coeffs()) {
      if (v != 0 && u > UINT64_MAX / v) {
        throw PreconditionError("multiply: index product overflows 64 bits");
      }
      acc[u * v] += a * b;
    }
  }
  return DirichletPoly(DirichletPoly::Map(acc.begin(), acc.end()));
}

DirichletPoly operator*(const DirichletPoly& f, const DirichletPoly& g) {
  return multiply(f, g);
}

DirichletPoly power(const DirichletPoly& f, unsigned k) {
  DirichletPoly result = DirichletPoly::constant(1.0);
  DirichletPoly base = f;
  while (k > 0) {
    if (k & 1u) result = multiply(result, base);
    k >>= 1u;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

cplx evaluate(const DirichletPoly& f, cplx s) {
  cplx sum{};
  for (const auto& [n, a] : f.coeffs()) {
    sum += a * std::exp(-s * std::log(static_cast<double>(n)));
  }
  return sum;
}

cplx derivative_at(const DirichletPoly& f, unsigned k, cplx c) {
  cplx sum{};
  for (const auto& [n, a] : f.coeffs()) {
    if (n == 1) {
      if (k == 0) sum += a;
      continue;
    }
    const double log_n = std::log(static_cast<double>(n));
    sum += a * std::pow(-log_n, static_cast<int>(k)) * std::exp(-c * log_n);
  }
  return sum;
}

DirichletPoly twist(const DirichletPoly& f, const Character& chi) {
  DirichletPoly::Map out;
  for (const auto& [n, a] : f.coeffs()) out.emplace(n, a * chi(n));
  return DirichletPoly(std::move(out));
}

long default_carlson_steps(const DirichletPoly& f, double T) {
  const double max_log = std::log(static_cast<double>(f.max_index()));
  double steps = std::ceil(200.0 * T * max_log);
  steps = std::clamp(steps, 2.0, 1.0e7);
  long n = static_cast<long>(steps);
  return n % 2 == 0 ? n : n + 1;
}

double carlson_mean(const DirichletPoly& f, double T, long steps) {
  if (!(T > 0.0)) throw DomainError("carlson_mean: T must be positive");
  if (steps <= 0) steps = default_carlson_steps(f, T);
  if (steps < 2) steps = 2;
  if (steps % 2 != 0) ++steps;

  const double h = 2.0 * T / static_cast<double>(steps);
  std::vector<double> logs;
  std::vector<cplx> coeffs;
  std::vector<cplx> step_rotation;
  for (const auto& [n, a] : f.coeffs()) {
    logs.push_back(std::log(static_cast<double>(n)));
    coeffs.push_back(a);
    step_rotation.push_back(std::polar(1.0, -h * logs.back()));
  }

  // Phasors a_n n^{-it} advance by a fixed rotation per node; they are
  // recomputed exactly every kResync nodes to stop rounding drift.
  constexpr long kResync = 1024;
  std::vector<cplx> phasor(coeffs.size());
  double odd = 0.0;
  double even = 0.0;
  double ends = 0.0;
  for (long i = 0; i <= steps; ++i) {
    if (i % kResync == 0) {
      const double t = -T + h * static_cast<double>(i);
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        phasor[j] = coeffs[j] * std::polar(1.0, -t * logs[j]);
      }
    }
    cplx v{};
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      v += phasor[j];
      phasor[j] *= step_rotation[j];
    }
    const double y = std::norm(v);
    if (i == 0 || i == steps) {
      ends += y;
    } else {
      (i % 2 == 1 ? odd : even) += y;
    }
  }
  const double integral = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
  return integral / (2.0 * T);
}

double carlson_error_constant(const DirichletPoly& f) {
  double k = 0.0;
  for (const auto& [m, a] : f.coeffs()) {
    for (const auto& [n, b] : f.coeffs()) {
      if (m == n) continue;
      const double gap = std::abs(std::log(static_cast<double>(m) /
                                           static_cast<double>(n)));
      k += std::abs(a) * std::abs(b) / gap;
    }
  }
  return k;
}

double h2k_norm(const DirichletPoly& f, unsigned k, double support_cap) {
  if (k == 0) throw PreconditionError("h2k_norm: k must be >= 1");
  const double projected =
      std::pow(static_cast<double>(f.support_size()), static_cast<double>(k));
  if (projected > support_cap) {
    throw PreconditionError("h2k_norm: support of f^k exceeds the cap");
  }
  return h2_norm_sq(power(f, k));
}

}  // namespace compnorm
