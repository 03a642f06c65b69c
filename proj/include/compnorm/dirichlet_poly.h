#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace compnorm {

using cplx = std::complex<double>;

class Character;

// A finitely supported Dirichlet series f(s) = sum_n a_n n^{-s}.
//
// Coefficients are kept in canonical form: every key is >= 1 and no stored
// coefficient is negligible (|a_n| < 1e-15 * max |a_m| or exactly zero), so
// two polynomials are equal iff their maps are equal.
class DirichletPoly {
 public:
  using Map = std::map<std::uint64_t, cplx>;

  DirichletPoly() = default;
  explicit DirichletPoly(Map coeffs);
  DirichletPoly(std::initializer_list<std::pair<const std::uint64_t, cplx>> il);

  // n^{-s} scaled by `a`.
  static DirichletPoly monomial(std::uint64_t n, cplx a = 1.0);
  static DirichletPoly constant(cplx a) { return monomial(1, a); }

  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }
  cplx coeff(std::uint64_t n) const;
  // Largest n in the support, 1 for the zero polynomial.
  std::uint64_t max_index() const;

  friend bool operator==(const DirichletPoly&, const DirichletPoly&) = default;

  DirichletPoly& operator+=(const DirichletPoly& other);
  DirichletPoly& operator*=(cplx scalar);

 private:
  void canonicalize();
  Map coeffs_;
};

DirichletPoly operator+(DirichletPoly lhs, const DirichletPoly& rhs);
DirichletPoly operator*(DirichletPoly lhs, cplx scalar);
DirichletPoly operator*(cplx scalar, DirichletPoly rhs);

// sum_n |a_n|^2.
double h2_norm_sq(const DirichletPoly& f);

// Dirichlet convolution: (f g)_m = sum_{uv = m} a_u b_v.
DirichletPoly multiply(const DirichletPoly& f, const DirichletPoly& g);
DirichletPoly operator*(const DirichletPoly& f, const DirichletPoly& g);

// f^k by repeated multiplication; f^0 = 1.
DirichletPoly power(const DirichletPoly& f, unsigned k);

// f(s) = sum a_n n^{-s}.
cplx evaluate(const DirichletPoly& f, cplx s);

// f^{(k)}(c) = sum a_n (-log n)^k n^{-c}.
cplx derivative_at(const DirichletPoly& f, unsigned k, cplx c);

// Vertical limit f_chi: coefficient a_n becomes a_n chi(n). Throws
// DomainError if the support has a prime factor outside chi's range.
DirichletPoly twist(const DirichletPoly& f, const Character& chi);

// Default panel count for carlson_mean: ceil(200 T max log n), clamped to
// [2, 1e7] and rounded up to an even number.
long default_carlson_steps(const DirichletPoly& f, double T);

// (1/2T) int_{-T}^{T} |f(it)|^2 dt by composite Simpson with `steps` panels
// (rounded up to even). steps <= 0 selects default_carlson_steps.
double carlson_mean(const DirichletPoly& f, double T, long steps = 0);

// sum_{m != n} |a_m| |a_n| / |log(m/n)|; |carlson_mean(f,T) - ||f||^2| is
// bounded by this over T (up to quadrature error).
double carlson_error_constant(const DirichletPoly& f);

// ||f||_{H^{2k}}^{2k} computed as ||f^k||_{H^2}^2. Throws PreconditionError
// if k == 0 or support_size^k exceeds `support_cap`.
double h2k_norm(const DirichletPoly& f, unsigned k,
                double support_cap = 1.0e7);

}  // namespace compnorm
