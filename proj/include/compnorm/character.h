#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace compnorm {

// A point chi of the torus T^d, extended to the completely multiplicative
// character n -> prod chi_j^{v_j} on integers n = prod p_j^{v_j} supported on
// the first d primes.
class Character {
 public:
  Character() = default;
  // Throws DomainError if some |chi_j| differs from 1 by more than 1e-12.
  explicit Character(std::vector<std::complex<double>> values);

  static Character trivial(std::size_t d);
  // chi_j = exp(i theta_j).
  static Character from_angles(const std::vector<double>& thetas);

  std::size_t dimension() const { return values_.size(); }
  const std::vector<std::complex<double>>& values() const { return values_; }
  std::complex<double> operator[](std::size_t j) const { return values_[j]; }

  // chi(n); throws DomainError when n has a prime factor beyond p_d.
  std::complex<double> operator()(std::uint64_t n) const;

  // Coordinatewise rotation by exp(i theta).
  Character rotated(double theta) const;

 private:
  std::vector<std::complex<double>> values_;
};

}  // namespace compnorm
