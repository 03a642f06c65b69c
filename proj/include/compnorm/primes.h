#pragma once

#include <cstdint>
#include <vector>

namespace compnorm {

// The first `count` primes, in increasing order.
std::vector<std::uint64_t> first_primes(std::size_t count);

// The j-th prime, 1-based (nth_prime(1) == 2).
std::uint64_t nth_prime(std::size_t j);

bool is_prime(std::uint64_t n);

// Exponent vector of n over the first d primes. Returns false when n has a
// prime factor outside that range; `exponents` is then unspecified.
bool factor_over_first_primes(std::uint64_t n, std::size_t d,
                              std::vector<int>& exponents);

}  // namespace compnorm
