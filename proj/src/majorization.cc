#include "compnorm/majorization.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "compnorm/composition.h"
#include "compnorm/errors.h"

namespace compnorm {

namespace {

void check_comparable(const CoeffVector& b, const CoeffVector& c) {
  if (b.d() != c.d()) throw PreconditionError("majorization: length mismatch");
  const double scale = std::max({1.0, b.r(), c.r()});
  if (std::abs(b.r() - c.r()) > 1e-12 * scale) {
    throw PreconditionError("majorization: sums differ");
  }
}

// Indices of v in decreasing order of value, ties by lowest index.
std::vector<std::size_t> argsort_desc(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&v](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return idx;
}

std::vector<cpp_int> binomial_row(unsigned n) {
  std::vector<cpp_int> row(n + 1);
  row[0] = 1;
  for (unsigned j = 1; j <= n; ++j) row[j] = row[j - 1] * (n - j + 1) / j;
  return row;
}

}  // namespace

bool majorizes(const CoeffVector& b, const CoeffVector& c) {
  check_comparable(b, c);
  const auto bs = b.sorted_desc();
  const auto cs = c.sorted_desc();
  const double tol = 1e-12 * std::max(1.0, c.r());
  double sb = 0.0;
  double sc = 0.0;
  for (std::size_t k = 0; k < bs.size(); ++k) {
    sb += bs[k];
    sc += cs[k];
    if (sb > sc + tol) return false;
  }
  return true;
}

std::vector<WeightedPermutation> bvn_decompose(const CoeffVector& b,
                                               const CoeffVector& c) {
  if (!majorizes(b, c)) {
    throw PreconditionError("bvn_decompose: b is not majorized by c");
  }
  const std::size_t d = b.d();
  const auto b_order = argsort_desc(b.entries());
  const auto c_order = argsort_desc(c.entries());
  std::vector<double> x(d), y(d);
  for (std::size_t i = 0; i < d; ++i) {
    x[i] = b[b_order[i]];
    y[i] = c[c_order[i]];
  }
  const double tol = 1e-15 * std::max(1.0, c.r());

  // Each term holds the index map taking c to the current y-combination.
  std::map<Permutation, double> terms{{c_order, 1.0}};
  for (std::size_t step = 0; step < d; ++step) {
    std::size_t j = d;
    for (std::size_t i = d; i-- > 0;) {
      if (x[i] < y[i] - tol) {
        j = i;
        break;
      }
    }
    if (j == d) break;
    std::size_t k = d;
    for (std::size_t i = j + 1; i < d; ++i) {
      if (x[i] > y[i] + tol) {
        k = i;
        break;
      }
    }
    if (k == d) break;
    const double gap_j = y[j] - x[j];
    const double gap_k = x[k] - y[k];
    const double delta = std::min(gap_j, gap_k);
    const double lambda = 1.0 - delta / (y[j] - y[k]);
    // Set the matched coordinate exactly so rounding cannot revisit it.
    if (gap_j <= gap_k) {
      y[j] = x[j];
      y[k] += delta;
    } else {
      y[k] = x[k];
      y[j] -= delta;
    }

    std::map<Permutation, double> next;
    for (const auto& [perm, w] : terms) {
      if (lambda > 0.0) next[perm] += lambda * w;
      if (lambda < 1.0) {
        Permutation swapped = perm;
        std::swap(swapped[j], swapped[k]);
        next[swapped] += (1.0 - lambda) * w;
      }
    }
    terms = std::move(next);
  }

  std::vector<std::size_t> b_rank(d);
  for (std::size_t i = 0; i < d; ++i) b_rank[b_order[i]] = i;
  std::map<Permutation, double> merged;
  for (const auto& [perm, w] : terms) {
    Permutation out(d);
    for (std::size_t m = 0; m < d; ++m) out[m] = perm[b_rank[m]];
    merged[out] += w;
  }
  std::vector<WeightedPermutation> parts;
  for (auto& [perm, w] : merged) {
    if (w > 0.0) parts.push_back({w, perm});
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& a, const auto& b) { return a.weight > b.weight; });

  const auto recon = apply_decomposition(parts, c);
  for (std::size_t i = 0; i < d; ++i) {
    if (std::abs(recon[i] - b[i]) >= 1e-10) {
      throw ConvergenceError("bvn_decompose: reconstruction residual too large");
    }
  }
  return parts;
}

std::vector<double> apply_decomposition(
    const std::vector<WeightedPermutation>& parts, const CoeffVector& c) {
  std::vector<double> out(c.d(), 0.0);
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < c.d(); ++i) out[i] += part.weight * c[part.perm[i]];
  }
  return out;
}

std::vector<DominanceRow> hq_dominance(const CoeffVector& b,
                                       const CoeffVector& c, unsigned K) {
  check_comparable(b, c);
  const auto mb = lattice_moments(b, K);
  const auto mc = lattice_moments(c, K);
  std::vector<DominanceRow> rows;
  for (unsigned k = 1; k <= K; ++k) {
    rows.push_back({k, mb[k], mc[k], mb[k] <= mc[k] * (1.0 + 1e-12)});
  }
  return rows;
}

std::vector<cpp_rational> exact_lattice_moments(
    const std::vector<cpp_rational>& c, unsigned K) {
  if (K > kMaxExactOrder) {
    throw PreconditionError("exact_lattice_moments: K above 60 is not supported");
  }
  std::vector<std::vector<cpp_int>> binom;
  for (unsigned n = 0; n <= K; ++n) binom.push_back(binomial_row(n));

  // e[n] = moment of order n restricted to the coordinates processed so far.
  std::vector<cpp_rational> e(K + 1, cpp_rational(0));
  e[0] = 1;
  for (const auto& ci : c) {
    const cpp_rational sq = ci * ci;
    std::vector<cpp_rational> pw(K + 1);
    pw[0] = 1;
    for (unsigned j = 1; j <= K; ++j) pw[j] = pw[j - 1] * sq;
    std::vector<cpp_rational> next(K + 1, cpp_rational(0));
    for (unsigned n = 0; n <= K; ++n) {
      for (unsigned j = 0; j <= n; ++j) {
        const cpp_int b = binom[n][j];
        next[n] += cpp_rational(b * b) * pw[j] * e[n - j];
      }
    }
    e = std::move(next);
  }
  return e;
}

std::vector<ExactDominanceRow> hq_dominance_exact(
    const std::vector<cpp_rational>& b, const std::vector<cpp_rational>& c,
    unsigned K) {
  if (b.size() != c.size()) throw PreconditionError("hq_dominance_exact: length mismatch");
  cpp_rational sb = 0, sc = 0;
  for (const auto& v : b) sb += v;
  for (const auto& v : c) sc += v;
  if (sb != sc) throw PreconditionError("hq_dominance_exact: sums differ");
  const auto mb = exact_lattice_moments(b, K);
  const auto mc = exact_lattice_moments(c, K);
  std::vector<ExactDominanceRow> rows;
  for (unsigned k = 1; k <= K; ++k) rows.push_back({k, mb[k], mc[k], mb[k] <= mc[k]});
  return rows;
}

std::vector<MultinomialRow> multinomial_inequality(unsigned K) {
  if (K > kMaxExactOrder) {
    throw PreconditionError("multinomial_inequality: K above 60 is not supported");
  }
  std::vector<cpp_int> fact(2 * K + 1);
  fact[0] = 1;
  for (unsigned i = 1; i <= 2 * K; ++i) fact[i] = fact[i - 1] * i;
  std::vector<MultinomialRow> rows;
  for (unsigned k = 1; k <= K; ++k) {
    cpp_int lhs = 0;
    cpp_int sixteen_pow = 1;
    for (unsigned j1 = 0; j1 <= k; ++j1) {
      for (unsigned j2 = 0; j1 + j2 <= k; ++j2) {
        const unsigned j3 = k - j1 - j2;
        const cpp_int m = fact[k] / (fact[j1] * fact[j2] * fact[j3]);
        lhs += m * m * sixteen_pow;
      }
      sixteen_pow *= 16;
    }
    cpp_int rhs = fact[2 * k] / (fact[k] * fact[k]);
    for (unsigned i = 0; i < k; ++i) rhs *= 9;
    rows.push_back({k, lhs, rhs, lhs <= rhs, lhs == rhs});
  }
  return rows;
}

}  // namespace compnorm
