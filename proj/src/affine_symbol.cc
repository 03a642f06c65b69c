#include "compnorm/affine_symbol.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "compnorm/errors.h"
#include "compnorm/primes.h"

namespace compnorm {

CoeffVector::CoeffVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
  for (double v : entries_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw PreconditionError("CoeffVector: entries must be finite and >= 0");
    }
  }
}

double CoeffVector::r() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0.0);
}

std::vector<double> CoeffVector::sorted_desc() const {
  auto v = entries_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<double> CoeffVector::nonzero() const {
  std::vector<double> v;
  for (double x : entries_) {
    if (x > 0.0) v.push_back(x);
  }
  return v;
}

AffineSymbol::AffineSymbol(cplx c, std::vector<double> coeffs)
    : AffineSymbol(c, std::move(coeffs), {}) {}

AffineSymbol::AffineSymbol(cplx c, std::vector<double> coeffs,
                           std::vector<cplx> twist)
    : c_(c), coeffs_(std::move(coeffs)), twist_(std::move(twist)) {
  if (twist_.empty()) twist_.assign(coeffs_.d(), 1.0);
  if (twist_.size() != coeffs_.d()) {
    throw PreconditionError("AffineSymbol: twist length must match coeffs");
  }
  for (const auto& t : twist_) {
    if (std::abs(std::abs(t) - 1.0) > 1e-12) {
      throw DomainError("AffineSymbol: twist values must be unimodular");
    }
  }
  if (!in_gordon_hedenmalm(*this)) {
    throw DomainError("AffineSymbol: need Re c > 1/2 and Re c - 1/2 >= r");
  }
}

AffineSymbol AffineSymbol::from_complex(cplx c, const std::vector<cplx>& coeffs) {
  std::vector<double> moduli;
  std::vector<cplx> twist;
  for (const auto& a : coeffs) {
    const double m = std::abs(a);
    moduli.push_back(m);
    twist.push_back(m > 0.0 ? a / m : cplx(1.0));
  }
  return AffineSymbol(c, std::move(moduli), std::move(twist));
}

AffineSymbol AffineSymbol::unchecked(cplx c, std::vector<double> coeffs) {
  AffineSymbol phi;
  phi.c_ = c;
  phi.coeffs_ = CoeffVector(std::move(coeffs));
  phi.twist_.assign(phi.coeffs_.d(), 1.0);
  return phi;
}

std::size_t AffineSymbol::active_primes() const {
  return coeffs_.nonzero().size();
}

DirichletPoly AffineSymbol::linear_part() const {
  const auto primes = first_primes(d());
  DirichletPoly::Map m;
  for (std::size_t j = 0; j < d(); ++j) {
    if (coeffs_[j] > 0.0) m[primes[j]] = coeffs_[j] * twist_[j];
  }
  return DirichletPoly(std::move(m));
}

bool in_gordon_hedenmalm(const AffineSymbol& phi) {
  const double a = phi.c().real() - 0.5;
  return a > 0.0 && a >= phi.r();
}

Disc mapping_disc(const AffineSymbol& phi) { return {phi.c(), phi.r()}; }

double xi(cplx c, double r) {
  const double a = c.real() - 0.5;
  if (!(r >= 0.0) || a < r) throw DomainError("xi: need Re c - 1/2 >= r >= 0");
  return a + std::sqrt(std::max(0.0, (a - r) * (a + r)));
}

double xi(const AffineSymbol& phi) { return xi(phi.c(), phi.r()); }

double effective_constant(const CoeffVector& c) {
  const double r = c.r();
  if (!(r > 0.0)) throw PreconditionError("effective_constant: zero vector");
  double sq = 0.0;
  for (double v : c.entries()) sq += (v / r) * (v / r);
  return sq;
}

Annulus annulus_radii(const AffineSymbol& phi) {
  const auto& e = phi.coeffs().entries();
  const double r = phi.r();
  const double top = e.empty() ? 0.0 : *std::max_element(e.begin(), e.end());
  return {std::max(0.0, 2.0 * top - r), r};
}

}  // namespace compnorm
