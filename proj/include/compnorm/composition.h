#pragma once

#include <vector>

#include "compnorm/affine_symbol.h"
#include "compnorm/dirichlet_poly.h"

namespace compnorm {

// m_k(u) = sum_{|j| = k} (k; j)^2 prod u_i^{2 j_i}, k = 0..K, for a
// probability vector u (zeros allowed). m_k is the collision probability of
// a multinomial(k; u) draw, so 0 < m_k <= 1 and no scaling can overflow.
std::vector<double> collision_moments(const std::vector<double>& u, unsigned K);

// ||L_c||_{2k}^{2k} = r^{2k} m_k(c / r), k = 0..K.
std::vector<double> lattice_moments(const CoeffVector& c, unsigned K);

constexpr unsigned kDefaultKMax = 200;
constexpr unsigned kKMaxCap = 2000;
constexpr double kCompTailTolerance = 1e-10;

struct CompNorm {
  double value;
  double tail_bound;
  unsigned k_used;
};

// ||C_phi f||^2 = sum_k |f^{(k)}(c)|^2 / (k!)^2 ||L_c||_{2k}^{2k}, summed to
// K and certified by a tail bound. K starts at k_max and doubles up to 2000
// until the tail is below 1e-10; ConvergenceError otherwise.
CompNorm comp_norm_sq_certified(const AffineSymbol& phi, const DirichletPoly& f,
                                unsigned k_max = kDefaultKMax);
double comp_norm_sq(const AffineSymbol& phi, const DirichletPoly& f,
                    unsigned k_max = kDefaultKMax);

// Expands f o phi = sum_{k <= K} f^{(k)}(c)/k! L^k coefficientwise, building
// L^k by repeated convolution on the prime lattice, and returns the sum of
// squared coefficient moduli.
double comp_bruteforce_norm_sq(const AffineSymbol& phi, const DirichletPoly& f,
                               unsigned k_max = 60);

}  // namespace compnorm
