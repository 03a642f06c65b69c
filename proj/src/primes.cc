#include "compnorm/primes.h"

#include <mutex>

#include "compnorm/errors.h"

namespace compnorm {

namespace {

std::mutex cache_mutex;
std::vector<std::uint64_t> cache{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

void extend_cache(std::size_t count) {
  std::uint64_t candidate = cache.back() + 2;
  while (cache.size() < count) {
    if (is_prime(candidate)) cache.push_back(candidate);
    candidate += 2;
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (cache.size() < count) extend_cache(count);
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::uint64_t nth_prime(std::size_t j) {
  if (j == 0) throw PreconditionError("nth_prime: index is 1-based");
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (cache.size() < j) extend_cache(j);
  return cache[j - 1];
}

bool factor_over_first_primes(std::uint64_t n, std::size_t d,
                              std::vector<int>& exponents) {
  if (n == 0) return false;
  exponents.assign(d, 0);
  const auto primes = first_primes(d);
  for (std::size_t j = 0; j < d && n > 1; ++j) {
    while (n % primes[j] == 0) {
      n /= primes[j];
      ++exponents[j];
    }
  }
  return n == 1;
}

}  // namespace compnorm
