#pragma once

#include <cstdint>
#include <vector>

#include "compnorm/affine_symbol.h"
#include "compnorm/character.h"
#include "compnorm/dirichlet_poly.h"

namespace compnorm {

// Counter-based generator: SplitMix64's finalizer applied to (seed, stream,
// counter). Any draw can be recomputed from its coordinates, so the
// estimates below do not depend on how samples are split across threads.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);
// Uniform on [0, 1) with 53 random bits.
double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

struct SamplePlan {
  std::uint64_t n_samples = 100000;
  std::uint64_t seed = 1;
  // Torus coordinates to draw; 0 means "as many as the symbol needs".
  std::size_t d = 0;
};

// The Haar-random character used for sample `index`: chi_j = exp(2 pi i u)
// with u drawn from stream j.
Character sample_character(const SamplePlan& plan, std::size_t d, std::uint64_t index);

// phi(s) = c + sum_{n >= 2} a_n n^{-s} together with a disc frame
// Theta(z) = c + r z. Affine symbols convert with their own r; other
// polynomial symbols carry the radius of the disc they map into.
class PolySymbol {
 public:
  // Throws PreconditionError if r <= 0 or the tail has a constant term.
  PolySymbol(cplx c, DirichletPoly tail, double r);
  explicit PolySymbol(const AffineSymbol& phi);

  cplx c() const { return c_; }
  const DirichletPoly& tail() const { return tail_; }
  double r() const { return r_; }
  // Number of primes needed to evaluate the tail at a character.
  std::size_t torus_dimension() const { return dim_; }

 private:
  cplx c_;
  DirichletPoly tail_;
  double r_;
  std::size_t dim_;
};

// phi*(chi) = c + sum_j c_j tw_j chi_j. Throws DomainError if chi covers
// fewer than d coordinates.
cplx boundary_value(const AffineSymbol& phi, const Character& chi);
cplx boundary_value(const PolySymbol& phi, const Character& chi);

// phi(i t).
cplx value_on_line(const PolySymbol& phi, double t);

struct MeasureEstimate {
  double estimate;
  // Half-width of the normal-approximation 95% interval.
  double ci95;
  std::uint64_t n_samples;
  std::uint64_t seed;
};

// Haar measure of {chi : |phi*(chi) - c| < delta r}. Requires 0 <= delta <= 1.
MeasureEstimate measure_E_delta(const PolySymbol& phi, double delta, const SamplePlan& plan);
MeasureEstimate measure_E_delta(const AffineSymbol& phi, double delta, const SamplePlan& plan);

// (1/2)(1 - delta)/(1 + delta) times a measure of E_delta.
double shapiro_factor(double delta);
double shapiro_constant(const PolySymbol& phi, double delta, const SamplePlan& plan);
double shapiro_constant(const AffineSymbol& phi, double delta, const SamplePlan& plan);

// Fraction of the uniform grid t_i = -T + 2T i/(steps - 1), i < steps, with
// |phi(i t) - c| < delta r.
double ergodic_measure(const PolySymbol& phi, double delta, double T, long steps);
double ergodic_measure(const AffineSymbol& phi, double delta, double T, long steps);

struct CurvePoint {
  double t;
  double re;
  double im;
};

// phi(i t) on `steps` equally spaced t in [t_min, t_max].
std::vector<CurvePoint> curve_trace(const PolySymbol& phi, double t_min, double t_max,
                                    long steps);
std::vector<CurvePoint> curve_trace(const AffineSymbol& phi, double t_min, double t_max,
                                    long steps);

// min and max of |phi(i t) - c| over a trace.
Annulus trace_extremes(const std::vector<CurvePoint>& trace, cplx c);

// Monte-Carlo mean of |f(phi*(chi))|^2 over Haar-random chi; its expectation
// is ||C_phi f||^2.
MeasureEstimate carleson_mean(const AffineSymbol& phi, const DirichletPoly& f,
                              const SamplePlan& plan);

// g(s) = exp(-sum_j lambda_j (e^{i theta_j} + p_j^{-s})/(e^{i theta_j} - p_j^{-s}))
// and the symbol c + r (g - g(inf))/(1 - conj(g(inf)) g).
struct InnerSymbolParams {
  std::vector<double> lambdas;
  std::vector<double> thetas;
  cplx c = 1.0;
  double r = 0.5;
  // Sum of the lambda_j left out beyond J, for the reported truncation bound.
  double omitted_lambda = 0.0;
};

// Throws PreconditionError on mismatched lengths, negative lambdas, or a
// frame outside Re c - 1/2 >= r > 0.
void validate(const InnerSymbolParams& params);

// g at chi_j p_j^{-sigma}. DomainError if sigma <= 0, chi is too short, or
// some chi_j p_j^{-sigma} is within 1e-12 of e^{i theta_j}.
cplx inner_value(const InnerSymbolParams& params, const Character& chi, double sigma);
double inner_boundary_modulus(const InnerSymbolParams& params, const Character& chi,
                              double sigma);
// g(+inf) = exp(-sum lambda_j).
double inner_value_at_infinity(const InnerSymbolParams& params);
// Bound on |log|g|| contributed by the omitted factors:
// 2 omitted_lambda / (1 - p_{J+1}^{-sigma}).
double inner_truncation_bound(const InnerSymbolParams& params, double sigma);

cplx mobius_symbol_value(const InnerSymbolParams& params, const Character& chi, double sigma);

// Monte-Carlo mean of |f(phi(sigma + chi))|^2 for the symbol above, with chi
// drawn on the first J coordinates. As sigma -> 0 this tends to
// ||C_phi f||^2.
MeasureEstimate inner_carleson_mean(const InnerSymbolParams& params, const DirichletPoly& f,
                                    double sigma, const SamplePlan& plan);

}  // namespace compnorm
