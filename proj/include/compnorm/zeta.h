#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace compnorm {

// Riemann zeta on the real half-line sigma > 1. Euler-Maclaurin with a
// cut at N = 100 and eight Bernoulli corrections; relative accuracy ~1e-13.
// Throws DomainError for sigma <= 1.
double zeta(double sigma);

// sum_{n >= m} (log n)^k n^{-sigma}: a direct block of 100 terms followed by
// the k-fold differentiated Euler-Maclaurin tail.
double log_power_tail(unsigned k, double sigma, std::uint64_t m);

// sum_{n >= m} n^{-sigma}.
double hurwitz_tail(double sigma, std::uint64_t m);

// zeta(1 + eps) and sum_{n >= m} n^{-1-eps} for eps > 0 given exactly; use
// these when the argument is within rounding distance of the pole.
double zeta_1p(double eps);
double hurwitz_tail_1p(double eps, std::uint64_t m);

constexpr unsigned kMaxZetaDerivOrder = 12;

// (-1)^k zeta^{(k)}(sigma) = sum_n (log n)^k n^{-sigma}, for 0 <= k <= 12.
double zeta_deriv(unsigned k, double sigma);

// Integer sets Lambda used for partial zeta functions and partial kernels.
struct FullIntegers {};
// {1} together with every n >= m.
struct CofiniteTail {
  std::uint64_t m = 2;
};
// {p^j : j >= 0}.
struct GeometricPowers {
  std::uint64_t p = 2;
};
// Multiplicative semigroup generated by a finite list of distinct primes.
struct PrimeSemigroup {
  std::vector<std::uint64_t> primes;
};

using LambdaSpec =
    std::variant<FullIntegers, CofiniteTail, GeometricPowers, PrimeSemigroup>;

// Throws PreconditionError on malformed specs (non-prime generators,
// duplicates, tail start < 2).
void validate(const LambdaSpec& lambda);

// sigma(Lambda): 1 for FullIntegers and CofiniteTail, 0 otherwise.
double abscissa(const LambdaSpec& lambda);

bool contains(const LambdaSpec& lambda, std::uint64_t n);

// zeta_Lambda(sigma) = sum_{n in Lambda} n^{-sigma}; sigma must exceed the
// abscissa.
double zeta_lambda(const LambdaSpec& lambda, double sigma);

struct DkZetaSandwich {
  double lower;
  double mid;
  double upper;
};

// k!(zeta(sigma)-1)/(sigma-1)^k <= zeta_deriv(k, sigma) <= k! zeta(sigma)/(sigma-1)^k.
DkZetaSandwich dkzeta_sandwich(unsigned k, double sigma);

struct RiemannSums {
  double lower;  // m^{sigma-1} sum_{n >= m+1} n^{-sigma}
  double upper;  // m^{sigma-1} sum_{n >= m} n^{-sigma}
};

RiemannSums riemann_sum_bounds(double sigma, std::uint64_t m);

// Root of alpha zeta(1+alpha) = 2 in [1, 2].
double alpha0();

}  // namespace compnorm
