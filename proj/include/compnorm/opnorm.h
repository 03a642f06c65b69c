#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compnorm/affine_symbol.h"
#include "compnorm/zeta.h"

namespace compnorm {

// Dense row-major complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  cplx operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

using MultiIndex = std::vector<unsigned>;

// Matrix of C_phi from span{n^{-s} : n <= n_in} onto the monomials
// prod p_j^{-k_j s} with |k| <= K_out. Row i is out_indices[i] over
// `primes`; column n-1 is the image of n^{-s}.
struct TruncatedOperator {
  std::vector<std::uint64_t> primes;
  unsigned n_in = 0;
  std::vector<MultiIndex> out_indices;
  DenseMatrix entries;
  // Exact column norm squared minus truncated column norm squared; empty when
  // the exact column norm is not known.
  std::vector<double> column_defect;
};

constexpr std::size_t kMaxMatrixEntries = 4'000'000;

// A[k, n] = n^{-c} (-log n)^{|k|} prod_j c_j^{k_j} / k_j!, with k ranging over
// the coordinates of nonzero coefficients. PreconditionError when the matrix
// would exceed kMaxMatrixEntries.
TruncatedOperator build_matrix(const AffineSymbol& phi, unsigned n_in, unsigned K_out);

// Symbol phi(s) = Phi(p^{-s}) with Taylor coefficients taylor[0..]; rows are
// the powers p^j, j <= K_out, and A[j, n] = n^{-Phi_0} [z^j] exp(-log n
// (Phi(z) - Phi_0)). Missing Taylor coefficients count as zero.
TruncatedOperator build_matrix_series(const std::vector<cplx>& taylor,
                                      std::uint64_t p, unsigned n_in, unsigned K_out);

// A^* A.
DenseMatrix gram(const TruncatedOperator& op);

// Gram matrix of build_matrix(phi, n_in, K_out) without forming the matrix:
// G[m, n] = conj(m^{-c}) n^{-c} sum_{k <= K} (log m log n)^k M_k / (k!)^2 with
// M_k the lattice moments of the coefficients.
DenseMatrix gram_closed_form(const AffineSymbol& phi, unsigned n_in, unsigned K_out);

constexpr double kPowerTolerance = 1e-10;
constexpr long kPowerMaxIterations = 100000;

// Largest eigenvalue of a Hermitian positive semidefinite matrix by power
// iteration from the all-ones vector, stopping when the Rayleigh quotient
// changes by less than tol relative. The Rayleigh quotient never exceeds
// the true value. ConvergenceError after 1e5 iterations.
double largest_eigenvalue(const DenseMatrix& hermitian, double tol = kPowerTolerance);

// sigma_max(A)^2, a lower bound for ||C_phi||^2.
double sigma_max_sq(const TruncatedOperator& op, double tol = kPowerTolerance);

struct KernelQuotient {
  double ratio;          // ||A x|| / ||x||, x_n = n^{-conj(w)} for n <= n_in
  double kernel_defect;  // 1 - ||x||^2 / zeta(2 Re w)
  double image_defect;   // ||C_phi f_x||^2 - ||A x||^2
};

// DomainError when Re w <= 1/2.
KernelQuotient kernel_quotient(const AffineSymbol& phi, cplx w, unsigned n_in,
                               unsigned K_out);

// sup over real w > 1/2 of kernel_quotient(...).ratio^2 on a 64-point
// logarithmic grid with golden-section refinement.
double kernel_sup_sq(const AffineSymbol& phi, unsigned n_in, unsigned K_out);

// Default search grid: 512 points sigma(Lambda)/2 + 10^u, u in [-6, log10 60].
std::vector<double> default_sigma_grid(const LambdaSpec& lambda);

// sup over the grid of zeta(2 Re phi_chi(sigma)) / zeta_Lambda(2 sigma), with
// the twist chi_j = -1 that minimises Re phi_chi(sigma), refined by golden
// section. Lambda must contain every prime carrying a nonzero coefficient.
double adjoint_bound_general(const AffineSymbol& phi, const LambdaSpec& lambda,
                             const std::vector<double>& sigma_grid);

// sup_{0 < x < 1} (2 - x) x zeta(2 Re c - 2 r (1 - x)), including the limit
// x -> 0+, which is 1/r when 2 Re c - 2r = 1 and 0 otherwise.
double adjoint_bound_2s(cplx c, double r);

struct BoundEntry {
  std::string name;
  double value;  // NaN when not applicable
  bool applicable;
  bool is_lower;
  std::string provenance;
};

struct BoundReport {
  std::vector<BoundEntry> entries;

  const BoundEntry& at(const std::string& name) const;
  double max_lower() const;
  double min_upper() const;
  // Every applicable lower bound is at most every applicable upper bound
  // plus tol.
  bool consistent(double tol = 1e-9) const;
};

constexpr unsigned kSuiteNin = 32;
constexpr unsigned kSuiteKout = 40;

BoundReport bound_suite(const AffineSymbol& phi, unsigned n_in = kSuiteNin,
                        unsigned K_out = kSuiteKout);

// phi_alpha(s) = 1/2 + alpha (1 - 2^{-s}) / (1 + 2^{-s}).
std::vector<cplx> phi_alpha_taylor(double alpha, unsigned K);

// Exact Gram <n^{-phi_alpha}, m^{-phi_alpha}> = (mn)^{-1/2} (min/max)^alpha.
DenseMatrix phi_alpha_gram(double alpha, unsigned n_in);

TruncatedOperator phi_alpha_matrix(double alpha, unsigned n_in, unsigned K_out);

// ||C K_sigma||^2 / ||K_sigma||^2 for the full reproducing kernel at real
// sigma > 1/2: (zeta(2 sigma + 1) + 2 sum_{m<n} m^{-b} n^{-a}) / zeta(2 sigma)
// with a = sigma + 1/2 + alpha, b = sigma + 1/2 - alpha.
double phi_alpha_kernel_quotient_sq(double alpha, double sigma);
double phi_alpha_kernel_sup_sq(double alpha);

// sup_{0 < x < 1} 4x/(1+x)^2 zeta(1 + 2 alpha x), with limits 2/alpha at 0
// and zeta(1 + 2 alpha) at 1.
double phi_alpha_adjoint_sq(double alpha);

BoundReport suite_for_phi_alpha(double alpha, unsigned n_in = kSuiteNin,
                                unsigned K_out = kSuiteKout);

}  // namespace compnorm
