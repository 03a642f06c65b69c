#include "compnorm/character.h"

#include <cmath>

#include "compnorm/errors.h"
#include "compnorm/primes.h"

namespace compnorm {

Character::Character(std::vector<std::complex<double>> values)
    : values_(std::move(values)) {
  for (const auto& v : values_) {
    if (std::abs(std::abs(v) - 1.0) > 1e-12) {
      throw DomainError("Character: values must be unimodular");
    }
  }
}

Character Character::trivial(std::size_t d) {
  return Character(std::vector<std::complex<double>>(d, 1.0));
}

Character Character::from_angles(const std::vector<double>& thetas) {
  std::vector<std::complex<double>> v;
  v.reserve(thetas.size());
  for (double t : thetas) v.push_back(std::polar(1.0, t));
  return Character(std::move(v));
}

std::complex<double> Character::operator()(std::uint64_t n) const {
  std::vector<int> exponents;
  if (!factor_over_first_primes(n, values_.size(), exponents)) {
    throw DomainError("Character: n has a prime factor outside the range");
  }
  std::complex<double> value = 1.0;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    for (int e = 0; e < exponents[j]; ++e) value *= values_[j];
  }
  return value;
}

Character Character::rotated(double theta) const {
  const auto w = std::polar(1.0, theta);
  std::vector<std::complex<double>> v = values_;
  for (auto& x : v) x *= w;
  return Character(std::move(v));
}

}  // namespace compnorm
