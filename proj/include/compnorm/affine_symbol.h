#pragma once

#include <complex>
#include <vector>

#include "compnorm/dirichlet_poly.h"

namespace compnorm {

// Nonnegative coefficient vector (c_1, ..., c_d) with r = sum c_j.
class CoeffVector {
 public:
  CoeffVector() = default;
  // Throws PreconditionError on negative or non-finite entries.
  explicit CoeffVector(std::vector<double> entries);

  const std::vector<double>& entries() const { return entries_; }
  std::size_t d() const { return entries_.size(); }
  double r() const;
  double operator[](std::size_t j) const { return entries_[j]; }
  // Decreasing rearrangement.
  std::vector<double> sorted_desc() const;
  // Entries with the zero coordinates removed.
  std::vector<double> nonzero() const;

 private:
  std::vector<double> entries_;
};

struct Disc {
  cplx center;
  double radius;
};

// phi(s) = c + sum_j c_j chi_j p_j^{-s} with c_j >= 0 and |chi_j| = 1.
// Norm computations depend only on (c, c_j); the twist chi is kept so that
// boundary values reproduce a symbol entered with complex coefficients.
class AffineSymbol {
 public:
  AffineSymbol() = default;
  // Throws DomainError unless the symbol is in the Gordon-Hedenmalm class,
  // PreconditionError on negative coefficients.
  AffineSymbol(cplx c, std::vector<double> coeffs);
  AffineSymbol(cplx c, std::vector<double> coeffs, std::vector<cplx> twist);

  // Complex coefficients a_j are stored as |a_j| with twist a_j / |a_j|.
  static AffineSymbol from_complex(cplx c, const std::vector<cplx>& coeffs);
  // Skips the class check; for negative tests.
  static AffineSymbol unchecked(cplx c, std::vector<double> coeffs);

  cplx c() const { return c_; }
  const CoeffVector& coeffs() const { return coeffs_; }
  const std::vector<cplx>& twist() const { return twist_; }
  std::size_t d() const { return coeffs_.d(); }
  double r() const { return coeffs_.r(); }
  bool is_constant() const { return r() == 0.0; }
  // Number of strictly positive coefficients.
  std::size_t active_primes() const;

  // L(s) = sum_j c_j chi_j p_j^{-s}, the nonconstant part.
  DirichletPoly linear_part() const;

 private:
  cplx c_{};
  CoeffVector coeffs_;
  std::vector<cplx> twist_;
};

// Re c > 1/2 and Re c - 1/2 >= r.
bool in_gordon_hedenmalm(const AffineSymbol& phi);

// Image of the closed extended half-plane: the disc D(c, r).
Disc mapping_disc(const AffineSymbol& phi);

// (Re c - 1/2) + sqrt((Re c - 1/2)^2 - r^2); DomainError if Re c - 1/2 < r.
double xi(cplx c, double r);
double xi(const AffineSymbol& phi);

// ||c||_2^2 / ||c||_1^2; PreconditionError for the zero vector.
double effective_constant(const CoeffVector& c);

struct Annulus {
  double inner;
  double outer;
};

// Closure of {|phi(it) - c|}: inner radius max(0, 2 max c_j - r), outer r.
Annulus annulus_radii(const AffineSymbol& phi);

}  // namespace compnorm
