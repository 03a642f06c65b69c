#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "compnorm/affine_symbol.h"

namespace compnorm {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// b is majorized by c: equal length, equal sums (within 1e-12 relative), and
// every partial sum of b's decreasing rearrangement is at most c's.
// Throws PreconditionError on length or sum mismatch.
bool majorizes(const CoeffVector& b, const CoeffVector& c);

// Permutation p acting by (P c)_i = c[p[i]].
using Permutation = std::vector<std::size_t>;

struct WeightedPermutation {
  double weight;
  Permutation perm;
};

// b = sum_k w_k P_k c with w_k > 0, sum w_k = 1, built from at most d-1
// T-transforms. Throws PreconditionError unless majorizes(b, c), and
// ConvergenceError if the reconstruction residual exceeds 1e-10.
std::vector<WeightedPermutation> bvn_decompose(const CoeffVector& b,
                                               const CoeffVector& c);

// sum_k w_k P_k c.
std::vector<double> apply_decomposition(
    const std::vector<WeightedPermutation>& parts, const CoeffVector& c);

struct DominanceRow {
  unsigned k;
  double lhs;
  double rhs;
  bool ok;
};

// lhs = ||L_b||_{2k}^{2k}, rhs = ||L_c||_{2k}^{2k} for k = 1..K in double
// precision (collision-probability recursion), ok iff lhs <= rhs(1 + 1e-12).
std::vector<DominanceRow> hq_dominance(const CoeffVector& b,
                                       const CoeffVector& c, unsigned K);

struct ExactDominanceRow {
  unsigned k;
  cpp_rational lhs;
  cpp_rational rhs;
  bool ok;
};

constexpr unsigned kMaxExactOrder = 60;

// Exact version for rational entries; K is capped at 60.
std::vector<ExactDominanceRow> hq_dominance_exact(
    const std::vector<cpp_rational>& b, const std::vector<cpp_rational>& c,
    unsigned K);

// sum_{|j| = k} (k; j)^2 prod c_i^{2 j_i} exactly.
std::vector<cpp_rational> exact_lattice_moments(
    const std::vector<cpp_rational>& c, unsigned K);

struct MultinomialRow {
  unsigned k;
  cpp_int lhs;  // sum_{j1+j2+j3=k} (k; j1,j2,j3)^2 16^{j1}
  cpp_int rhs;  // 9^k binom(2k, k)
  bool ok;
  bool equal;
};

// The three-prime multinomial inequality, by direct enumeration of
// (j1, j2, j3). K is capped at 60.
std::vector<MultinomialRow> multinomial_inequality(unsigned K);

}  // namespace compnorm
