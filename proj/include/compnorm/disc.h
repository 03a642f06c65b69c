#pragma once

#include <complex>
#include <vector>

namespace compnorm {

using cplx = std::complex<double>;

// f(z) = sum_{k=0}^{N} a_k z^k on the unit disc; ||f||^2 = sum |a_k|^2.
class PowerSeries {
 public:
  PowerSeries() : coeffs_{0.0} {}
  explicit PowerSeries(std::vector<cplx> coeffs);

  static PowerSeries identity() { return PowerSeries({0.0, 1.0}); }
  static PowerSeries monomial(unsigned k, cplx a = 1.0);
  // 1/(1 - q z) truncated at degree N.
  static PowerSeries geometric(cplx q, unsigned N);

  const std::vector<cplx>& coeffs() const { return coeffs_; }
  unsigned degree() const { return unsigned(coeffs_.size() - 1); }
  cplx operator[](unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }
  double norm_sq() const;
  cplx operator()(cplx z) const;

 private:
  std::vector<cplx> coeffs_;
};

// p(z)/q(z) with q(0) != 0.
struct RationalMap {
  PowerSeries num;
  PowerSeries den;
  cplx operator()(cplx z) const { return num(z) / den(z); }
};

// z/(2 - z).
RationalMap psi_map();

// Taylor coefficients of a rational map through degree N.
PowerSeries taylor(const RationalMap& phi, unsigned N);

// Checks |phi(0)| < 1 and max |phi| <= 1 + 1e-9 over 4096 points of the
// circle; throws DomainError otherwise.
void check_self_map(const PowerSeries& phi);
void check_self_map(const RationalMap& phi);

// Degree-N truncation of f o phi, by Horner's rule with truncation after
// every step. The rational overload composes with taylor(phi, N).
PowerSeries compose_truncated(const PowerSeries& f, const PowerSeries& phi, unsigned N);
PowerSeries compose_truncated(const PowerSeries& f, const RationalMap& phi, unsigned N);

// Lower-triangular matrix of C_psi, psi = z/(2 - z), on degrees 0..N:
// entry (0, 0) = 1 and (j, k) = 2^{-j} binom(j-1, k-1) for 1 <= k <= j.
std::vector<std::vector<double>> psi_matrix(unsigned N);
// Coefficients 0..N of f o psi, row by row without storing the matrix.
PowerSeries psi_apply(const PowerSeries& f, unsigned N);

// ||C_phi||^2 = (1 + |w|)/(1 - |w|) for the disc automorphism moving w to 0;
// DomainError for |w| >= 1.
double mobius_comp_norm_sq(cplx w);

struct NormComparison {
  double lhs;
  double rhs;
  bool ok;
};

// ||f o phi||^2 (truncated at N) against ||f||^2, for phi(0) = 0.
// Throws PreconditionError if |phi(0)| > 1e-14, DomainError if phi is not a
// self-map.
NormComparison littlewood_check(const PowerSeries& phi, const PowerSeries& f, unsigned N);

struct ShapiroCheck {
  double lhs;
  double rhs;
  double c_delta;
  // Measure of E_delta = {|phi| < delta} on the sample grid.
  double measure;
  // Bound on the error of `measure` from the grid: crossings / samples.
  double sampling_error;
  bool ok;
};

// ||f o phi||^2 <= C_delta |f(0)|^2 + (1 - C_delta) ||f||^2 with
// C_delta = (1/2)(1 - delta)/(1 + delta) m(E_delta), m estimated on
// `boundary_samples` equally spaced points. f o phi is truncated at N.
ShapiroCheck shapiro_bound_check(const PowerSeries& phi, double delta, const PowerSeries& f,
                                 unsigned boundary_samples, unsigned N);
ShapiroCheck shapiro_bound_check(const RationalMap& phi, double delta, const PowerSeries& f,
                                 unsigned boundary_samples, unsigned N);

}  // namespace compnorm
