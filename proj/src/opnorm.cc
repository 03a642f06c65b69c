#include "compnorm/opnorm.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "compnorm/composition.h"
#include "compnorm/errors.h"
#include "compnorm/primes.h"
#include "parallel.h"
#include "search.h"

namespace compnorm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::size_t> active_coordinates(const AffineSymbol& phi) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < phi.d(); ++j) {
    if (phi.coeffs()[j] > 0.0) idx.push_back(j);
  }
  return idx;
}

// All k in N^dims with |k| <= K, ordered by |k| and then lexicographically
// from the largest first coordinate.
void enumerate_graded(std::size_t dims, unsigned K, std::vector<MultiIndex>& out) {
  MultiIndex current(dims, 0);
  for (unsigned total = 0; total <= K; ++total) {
    auto fill = [&](auto&& self, std::size_t pos, unsigned left) -> void {
      if (pos + 1 == dims) {
        current[pos] = left;
        out.push_back(current);
        return;
      }
      for (unsigned v = left + 1; v-- > 0;) {
        current[pos] = v;
        self(self, pos + 1, left - v);
      }
    };
    if (dims == 0) {
      if (total == 0) out.push_back({});
      continue;
    }
    fill(fill, 0, total);
  }
}

double graded_count(std::size_t dims, unsigned K) {
  // binom(K + dims, dims)
  double v = 1.0;
  for (std::size_t i = 1; i <= dims; ++i) v = v * double(K + i) / double(i);
  return v;
}

void check_cap(double rows, double cols) {
  if (rows * cols > double(kMaxMatrixEntries)) {
    throw PreconditionError("build_matrix: requested size exceeds the entry cap");
  }
}

// v[n-1][k] = n^{-c} (-r log n)^k / k!, the degree-aggregated columns.
std::vector<std::vector<cplx>> degree_columns(const AffineSymbol& phi, unsigned n_in,
                                              unsigned K) {
  const double r = phi.r();
  std::vector<std::vector<cplx>> v(n_in, std::vector<cplx>(K + 1));
  for (unsigned n = 1; n <= n_in; ++n) {
    const double log_n = std::log(double(n));
    cplx term = std::exp(-phi.c() * log_n);
    for (unsigned k = 0; k <= K; ++k) {
      v[n - 1][k] = term;
      term *= -r * log_n / double(k + 1);
    }
  }
  return v;
}

std::vector<double> symbol_moments(const AffineSymbol& phi, unsigned K) {
  const double r = phi.r();
  if (r == 0.0) {
    std::vector<double> m(K + 1, 0.0);
    m[0] = 1.0;
    return m;
  }
  std::vector<double> u;
  for (double v : phi.coeffs().entries()) u.push_back(v / r);
  return collision_moments(u, K);
}

// ||A x||^2 / ||x||^2 for x_n = n^{-conj(w)}, through the aggregated columns.
double truncated_kernel_quotient_sq(const std::vector<std::vector<cplx>>& v,
                                    const std::vector<double>& m, cplx w,
                                    double* x_norm_sq = nullptr,
                                    std::vector<cplx>* x_out = nullptr) {
  const std::size_t n_in = v.size();
  const std::size_t K = m.size() - 1;
  std::vector<cplx> x(n_in);
  double xx = 0.0;
  for (std::size_t i = 0; i < n_in; ++i) {
    x[i] = std::exp(-std::conj(w) * std::log(double(i + 1)));
    xx += std::norm(x[i]);
  }
  double ax = 0.0;
  for (std::size_t k = 0; k <= K; ++k) {
    if (m[k] == 0.0) continue;
    cplx s{};
    for (std::size_t i = 0; i < n_in; ++i) s += v[i][k] * x[i];
    ax += m[k] * std::norm(s);
  }
  if (x_norm_sq) *x_norm_sq = xx;
  if (x_out) *x_out = std::move(x);
  return ax / xx;
}

// 512 points in (0, 1), log-spaced towards both ends down to 1e-12.
std::vector<double> unit_interval_grid() {
  auto grid = detail::log_offsets(0.0, -12.0, std::log10(0.5), 256);
  for (double x : detail::log_offsets(0.0, -12.0, std::log10(0.5), 256)) {
    grid.push_back(1.0 - x);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

TruncatedOperator build_matrix(const AffineSymbol& phi, unsigned n_in, unsigned K_out) {
  if (!in_gordon_hedenmalm(phi)) {
    throw DomainError("build_matrix: symbol outside the Gordon-Hedenmalm class");
  }
  if (n_in < 1) throw PreconditionError("build_matrix: n_in must be >= 1");
  const auto active = active_coordinates(phi);
  check_cap(graded_count(active.size(), K_out), n_in);

  TruncatedOperator op;
  op.primes = first_primes(phi.d());
  op.n_in = n_in;
  std::vector<MultiIndex> local;
  enumerate_graded(active.size(), K_out, local);
  for (const auto& k : local) {
    MultiIndex full(phi.d(), 0);
    for (std::size_t i = 0; i < active.size(); ++i) full[active[i]] = k[i];
    op.out_indices.push_back(std::move(full));
  }

  // Per-row constant: sum_j (k_j log c_j - log k_j!), and the degree |k|.
  const std::size_t rows = local.size();
  std::vector<double> row_log(rows, 0.0);
  std::vector<unsigned> row_deg(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t a = 0; a < active.size(); ++a) {
      const unsigned kj = local[i][a];
      row_deg[i] += kj;
      row_log[i] += kj * std::log(phi.coeffs()[active[a]]) - std::lgamma(kj + 1.0);
    }
  }

  op.entries = DenseMatrix(rows, n_in);
  op.column_defect.assign(n_in, 0.0);
  const cplx c = phi.c();
  detail::parallel_chunks(n_in, 16, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t col = begin; col < end; ++col) {
      const unsigned n = unsigned(col + 1);
      double col_sq = 0.0;
      if (n == 1) {
        op.entries(0, col) = 1.0;
        col_sq = 1.0;
      } else {
        const double log_n = std::log(double(n));
        const double log_log_n = std::log(log_n);
        const cplx phase = std::polar(1.0, -c.imag() * log_n);
        for (std::size_t i = 0; i < rows; ++i) {
          const double mag =
              std::exp(-c.real() * log_n + row_deg[i] * log_log_n + row_log[i]);
          const cplx value = (row_deg[i] % 2 == 0 ? 1.0 : -1.0) * mag * phase;
          op.entries(i, col) = value;
          col_sq += std::norm(value);
        }
      }
      op.column_defect[col] =
          comp_norm_sq(phi, DirichletPoly::monomial(n)) - col_sq;
    }
  });
  return op;
}

TruncatedOperator build_matrix_series(const std::vector<cplx>& taylor, std::uint64_t p,
                                      unsigned n_in, unsigned K_out) {
  if (taylor.empty()) throw PreconditionError("build_matrix_series: empty symbol");
  if (!is_prime(p)) throw PreconditionError("build_matrix_series: p must be prime");
  if (n_in < 1) throw PreconditionError("build_matrix_series: n_in must be >= 1");
  check_cap(double(K_out) + 1.0, n_in);
  if (taylor[0].real() <= 0.5) {
    throw DomainError("build_matrix_series: need Re Phi(0) > 1/2");
  }

  TruncatedOperator op;
  op.primes = {p};
  op.n_in = n_in;
  for (unsigned j = 0; j <= K_out; ++j) op.out_indices.push_back({j});
  op.entries = DenseMatrix(K_out + 1, n_in);
  auto phi_i = [&taylor](unsigned i) { return i < taylor.size() ? taylor[i] : cplx{}; };

  detail::parallel_chunks(n_in, 16, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<cplx> h(K_out + 1), g(K_out + 1);
    for (std::size_t col = begin; col < end; ++col) {
      const double log_n = std::log(double(col + 1));
      for (unsigned i = 1; i <= K_out; ++i) h[i] = -log_n * phi_i(i);
      // g = exp(h) through j g_j = sum_{i=1}^{j} i h_i g_{j-i}.
      g[0] = 1.0;
      for (unsigned j = 1; j <= K_out; ++j) {
        cplx acc{};
        for (unsigned i = 1; i <= j; ++i) acc += double(i) * h[i] * g[j - i];
        g[j] = acc / double(j);
      }
      const cplx base = std::exp(-taylor[0] * log_n);
      for (unsigned j = 0; j <= K_out; ++j) op.entries(j, col) = base * g[j];
    }
  });
  return op;
}

DenseMatrix gram(const TruncatedOperator& op) {
  const std::size_t n = op.entries.cols();
  const std::size_t rows = op.entries.rows();
  DenseMatrix g(n, n);
  detail::parallel_chunks(n, 16, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        cplx s{};
        for (std::size_t i = 0; i < rows; ++i) {
          s += std::conj(op.entries(i, a)) * op.entries(i, b);
        }
        g(a, b) = s;
      }
    }
  });
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) g(a, b) = std::conj(g(b, a));
  }
  return g;
}

DenseMatrix gram_closed_form(const AffineSymbol& phi, unsigned n_in, unsigned K_out) {
  if (!in_gordon_hedenmalm(phi)) {
    throw DomainError("gram_closed_form: symbol outside the Gordon-Hedenmalm class");
  }
  const auto v = degree_columns(phi, n_in, K_out);
  const auto m = symbol_moments(phi, K_out);
  DenseMatrix g(n_in, n_in);
  for (unsigned a = 0; a < n_in; ++a) {
    for (unsigned b = a; b < n_in; ++b) {
      cplx s{};
      for (unsigned k = 0; k <= K_out; ++k) s += m[k] * std::conj(v[a][k]) * v[b][k];
      g(a, b) = s;
      g(b, a) = std::conj(s);
    }
  }
  return g;
}

double largest_eigenvalue(const DenseMatrix& h, double tol) {
  const std::size_t n = h.rows();
  if (n == 0 || h.cols() != n) throw PreconditionError("largest_eigenvalue: need a square matrix");
  std::vector<cplx> v(n, 1.0 / std::sqrt(double(n)));
  std::vector<cplx> w(n);
  auto matvec = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      cplx s{};
      for (std::size_t j = 0; j < n; ++j) s += h(i, j) * v[j];
      w[i] = s;
    }
  };
  matvec();
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (long it = 0; it < kPowerMaxIterations; ++it) {
    double rayleigh = 0.0;
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      rayleigh += (std::conj(v[i]) * w[i]).real();
      norm_sq += std::norm(w[i]);
    }
    if (norm_sq == 0.0) return 0.0;
    if (std::abs(rayleigh - prev) <= tol * std::abs(rayleigh)) return rayleigh;
    prev = rayleigh;
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] * inv;
    matvec();
  }
  throw ConvergenceError("largest_eigenvalue: power iteration did not converge");
}

double sigma_max_sq(const TruncatedOperator& op, double tol) {
  return largest_eigenvalue(gram(op), tol);
}

KernelQuotient kernel_quotient(const AffineSymbol& phi, cplx w, unsigned n_in,
                               unsigned K_out) {
  if (!(w.real() > 0.5)) throw DomainError("kernel_quotient: need Re w > 1/2");
  if (n_in < 1) throw PreconditionError("kernel_quotient: n_in must be >= 1");
  const auto v = degree_columns(phi, n_in, K_out);
  const auto m = symbol_moments(phi, K_out);
  double xx = 0.0;
  std::vector<cplx> x;
  const double q = truncated_kernel_quotient_sq(v, m, w, &xx, &x);
  DirichletPoly::Map coeffs;
  for (unsigned n = 1; n <= n_in; ++n) coeffs[n] = x[n - 1];
  const double exact = comp_norm_sq(phi, DirichletPoly(std::move(coeffs)));
  return {std::sqrt(q), 1.0 - xx / zeta(2.0 * w.real()), exact - q * xx};
}

double kernel_sup_sq(const AffineSymbol& phi, unsigned n_in, unsigned K_out) {
  const auto v = degree_columns(phi, n_in, K_out);
  const auto m = symbol_moments(phi, K_out);
  const auto grid = detail::log_offsets(0.5, -3.0, 1.7, 64);
  auto f = [&](double w) { return truncated_kernel_quotient_sq(v, m, w); };
  return detail::grid_sup(f, grid).value;
}

std::vector<double> default_sigma_grid(const LambdaSpec& lambda) {
  return detail::log_offsets(abscissa(lambda) / 2.0, -6.0, std::log10(60.0), 512);
}

double adjoint_bound_general(const AffineSymbol& phi, const LambdaSpec& lambda,
                             const std::vector<double>& sigma_grid) {
  if (!in_gordon_hedenmalm(phi)) {
    throw DomainError("adjoint_bound_general: symbol outside the class");
  }
  validate(lambda);
  if (sigma_grid.empty()) throw PreconditionError("adjoint_bound_general: empty grid");
  const double lo = abscissa(lambda) / 2.0;
  for (double s : sigma_grid) {
    if (!(s > lo) || !std::isfinite(s)) {
      throw PreconditionError("adjoint_bound_general: grid point at or below sigma(Lambda)/2");
    }
  }
  const auto primes = first_primes(phi.d());
  std::vector<std::pair<double, double>> terms;  // (c_j, log p_j)
  for (std::size_t j = 0; j < phi.d(); ++j) {
    if (phi.coeffs()[j] == 0.0) continue;
    if (!contains(lambda, primes[j])) {
      throw PreconditionError("adjoint_bound_general: Lambda misses a prime of the symbol");
    }
    terms.emplace_back(phi.coeffs()[j], std::log(double(primes[j])));
  }
  const double re_c = phi.c().real();
  auto ratio = [&](double sigma) {
    double shift = 0.0;
    for (const auto& [cj, log_p] : terms) shift += cj * std::exp(-sigma * log_p);
    const double arg = 2.0 * (re_c - shift);
    if (!(arg > 1.0)) return 0.0;
    return zeta(arg) / zeta_lambda(lambda, 2.0 * sigma);
  };
  auto grid = sigma_grid;
  std::sort(grid.begin(), grid.end());
  return detail::grid_sup(ratio, grid).value;
}

double adjoint_bound_2s(cplx c, double r) {
  const double a = c.real() - 0.5;
  if (!(r > 0.0) || a < r - 1e-12) {
    throw DomainError("adjoint_bound_2s: need Re c - 1/2 >= r > 0");
  }
  // zeta argument is 1 + eps0 + 2 r x; eps0 = 2(Re c - 1/2 - r) is snapped
  // to 0 within 1e-12, the case where the x -> 0+ limit is 1/r.
  double eps0 = 2.0 * (a - r);
  const bool on_boundary = std::abs(eps0) <= 1e-12;
  if (on_boundary) eps0 = 0.0;
  auto g = [&](double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return (2.0 - x) * x * zeta_1p(eps0 + 2.0 * r * x);
  };
  double best = detail::grid_sup(g, unit_interval_grid()).value;
  if (on_boundary) best = std::max(best, 1.0 / r);
  return best;
}

const BoundEntry& BoundReport::at(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("BoundReport: no entry named " + name);
}

double BoundReport::max_lower() const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& e : entries) {
    if (e.applicable && e.is_lower) best = std::max(best, e.value);
  }
  return best;
}

double BoundReport::min_upper() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : entries) {
    if (e.applicable && !e.is_lower) best = std::min(best, e.value);
  }
  return best;
}

bool BoundReport::consistent(double tol) const {
  for (const auto& e : entries) {
    if (e.applicable && !std::isfinite(e.value)) return false;
  }
  return max_lower() <= min_upper() + tol;
}

namespace {

BoundEntry lower(std::string name, double value, std::string provenance) {
  return {std::move(name), value, true, true, std::move(provenance)};
}

BoundEntry upper(std::string name, double value, std::string provenance) {
  return {std::move(name), value, true, false, std::move(provenance)};
}

BoundEntry not_applicable(std::string name, bool is_lower, std::string provenance) {
  return {std::move(name), kNaN, false, is_lower, std::move(provenance)};
}

}  // namespace

BoundReport bound_suite(const AffineSymbol& phi, unsigned n_in, unsigned K_out) {
  if (!in_gordon_hedenmalm(phi)) {
    throw DomainError("bound_suite: symbol outside the Gordon-Hedenmalm class");
  }
  const double re_c = phi.c().real();
  const double r = phi.r();
  const double x = xi(phi);
  const auto active = active_coordinates(phi);
  const double gen = zeta(2.0 * re_c);

  BoundReport report;
  auto& e = report.entries;
  e.push_back(lower("genlower", gen, "zeta(2 Re c), general lower bound"));

  if (r == 0.0) {
    e.push_back(lower("adjoint_lower", gen, "constant symbol: adjoint quotient equals zeta(2 Re c)"));
  } else if (active.size() == 1) {
    e.push_back(lower("adjoint_lower", adjoint_bound_2s(phi.c(), r),
                      "sup (2-x) x zeta(2 Re c - 2r(1-x)), single prime"));
  } else {
    const auto primes = first_primes(phi.d());
    PrimeSemigroup semi;
    for (auto j : active) semi.primes.push_back(primes[j]);
    const LambdaSpec lambda = semi;
    e.push_back(lower("adjoint_lower",
                      adjoint_bound_general(phi, lambda, default_sigma_grid(lambda)),
                      "sup zeta(2 Re phi(sigma)) / zeta_Lambda(2 sigma), Lambda generated by the symbol's primes"));
  }

  e.push_back(lower("matrix_lower",
                    largest_eigenvalue(gram_closed_form(phi, n_in, K_out)),
                    "largest singular value squared of the truncated matrix"));
  e.push_back(lower("kernel_S_lower", kernel_sup_sq(phi, n_in, K_out),
                    "sup over real w of truncated kernel quotient squared"));

  const double z1xi = zeta(1.0 + x);
  if (active.size() <= 1) {
    e.push_back(upper("mpq_upper", z1xi, "zeta(1 + xi), single-prime symbol"));
  } else {
    e.push_back(not_applicable("mpq_upper", false, "zeta(1 + xi) is proved only for one prime"));
  }

  if (r == 0.0) {
    e.push_back(upper("combo_upper", gen, "constant symbol: zeta(2 Re c)"));
  } else {
    const double cc = effective_constant(phi.coeffs());
    e.push_back(upper("combo_upper", (1.0 - cc) * gen + cc * z1xi,
                      "(1 - C) zeta(2 Re c) + C zeta(1 + xi), C = |c|_2^2 / |c|_1^2"));
  }

  bool uniform = r > 0.0;
  for (auto j : active) {
    if (std::abs(phi.coeffs()[j] - phi.coeffs()[active[0]]) > 1e-14 * r) uniform = false;
  }
  if (uniform) {
    e.push_back(upper("smallnorm_upper", gen * (1.0 + 1.0 / double(active.size())),
                      "zeta(2 Re c)(1 + 1/d), equal coefficients"));
  } else {
    e.push_back(not_applicable("smallnorm_upper", false, "needs equal coefficients"));
  }

  const bool newupper_ok = active.size() == 1 && std::abs(re_c - 0.5 - r) <= 1e-12 &&
                           x >= alpha0();
  if (newupper_ok) {
    e.push_back(upper("newupper", 0.5 * (zeta(1.0 + 2.0 * x) + z1xi),
                      "(zeta(1 + 2 xi) + zeta(1 + xi)) / 2, Re c - 1/2 = r = xi >= alpha0"));
  } else {
    e.push_back(not_applicable("newupper", false,
                               "needs one prime and Re c - 1/2 = r = xi >= alpha0"));
  }
  e.push_back(not_applicable("brevig_lower", true, "phi_alpha family only"));
  e.push_back(not_applicable("brevig_upper", false, "phi_alpha family only"));
  return report;
}

std::vector<cplx> phi_alpha_taylor(double alpha, unsigned K) {
  std::vector<cplx> t(K + 1);
  t[0] = 0.5 + alpha;
  for (unsigned i = 1; i <= K; ++i) t[i] = 2.0 * alpha * (i % 2 == 0 ? 1.0 : -1.0);
  return t;
}

DenseMatrix phi_alpha_gram(double alpha, unsigned n_in) {
  if (!(alpha > 0.0)) throw DomainError("phi_alpha_gram: alpha must be positive");
  DenseMatrix g(n_in, n_in);
  for (unsigned a = 1; a <= n_in; ++a) {
    for (unsigned b = 1; b <= n_in; ++b) {
      const double lo = std::min(a, b);
      const double hi = std::max(a, b);
      g(a - 1, b - 1) = std::pow(double(a) * double(b), -0.5) * std::pow(lo / hi, alpha);
    }
  }
  return g;
}

TruncatedOperator phi_alpha_matrix(double alpha, unsigned n_in, unsigned K_out) {
  if (!(alpha > 0.0)) throw DomainError("phi_alpha_matrix: alpha must be positive");
  auto op = build_matrix_series(phi_alpha_taylor(alpha, K_out), 2, n_in, K_out);
  op.column_defect.assign(n_in, 0.0);
  for (unsigned col = 0; col < n_in; ++col) {
    double sq = 0.0;
    for (unsigned j = 0; j <= K_out; ++j) sq += std::norm(op.entries(j, col));
    op.column_defect[col] = 1.0 / double(col + 1) - sq;
  }
  return op;
}

namespace {

// Quotient at sigma = 1/2 + eps, keeping eps exact near the pole of
// zeta(2 sigma).
double phi_alpha_quotient_eps(double alpha, double eps) {
  const double sigma = 0.5 + eps;
  const double a = sigma + 0.5 + alpha;
  const double b = sigma + 0.5 - alpha;
  const double delta = alpha - eps;  // 1 - b
  constexpr unsigned kDirect = 10000;

  // s = sum_{m < n <= N} m^{-b} n^{-a}; p = sum_{m <= N} m^{-b} afterwards.
  double s = 0.0;
  double p = 1.0;
  for (unsigned n = 2; n <= kDirect; ++n) {
    const double log_n = std::log(double(n));
    s += std::exp(-a * log_n) * p;
    p += std::exp(-b * log_n);
  }
  // For n > N, sum_{m<n} m^{-b} = C + (n^delta - 1)/delta - n^{-b}/2
  // - (b/12) n^{-b-1} + b(b+1)(b+2)/720 n^{-b-3} + ..., with C fitted at
  // n = N + 1. (n^delta - 1)/delta tends to log n as delta -> 0.
  const double big = double(kDirect) + 1.0;
  const double e3 = b * (b + 1.0) * (b + 2.0) / 720.0;
  auto growth = [delta](double log_n) {
    return delta == 0.0 ? log_n : std::expm1(delta * log_n) / delta;
  };
  const double smooth = growth(std::log(big)) - 0.5 * std::pow(big, -b) -
                        (b / 12.0) * std::pow(big, -b - 1.0) + e3 * std::pow(big, -b - 3.0);
  const double cfit = p - smooth;
  auto tail = [&](double exponent) { return hurwitz_tail(exponent, kDirect + 1); };

  // sum_{n > N} n^{-a} (n^delta - 1)/delta.
  double growth_tail = 0.0;
  if (std::abs(delta) < 1e-4) {
    double coef = 1.0;
    for (unsigned k = 1; k <= kMaxZetaDerivOrder; ++k) {
      coef /= double(k);
      const double term = coef * log_power_tail(k, a, kDirect + 1);
      growth_tail += term;
      if (std::abs(term) < 1e-17 * std::abs(growth_tail)) break;
      coef *= delta;
    }
  } else {
    // a + delta = 2 sigma = 1 + 2 eps.
    growth_tail = (hurwitz_tail_1p(2.0 * eps, kDirect + 1) - tail(a)) / delta;
  }
  s += cfit * tail(a) + growth_tail - 0.5 * tail(a + b) - (b / 12.0) * tail(a + b + 1.0) +
       e3 * tail(a + b + 3.0);
  return (zeta(2.0 * sigma + 1.0) + 2.0 * s) / zeta_1p(2.0 * eps);
}

}  // namespace

double phi_alpha_kernel_quotient_sq(double alpha, double sigma) {
  if (!(alpha > 0.0)) throw DomainError("phi_alpha_kernel_quotient_sq: alpha must be positive");
  if (!(sigma > 0.5)) throw DomainError("phi_alpha_kernel_quotient_sq: need sigma > 1/2");
  return phi_alpha_quotient_eps(alpha, sigma - 0.5);
}

double phi_alpha_kernel_sup_sq(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("phi_alpha_kernel_sup_sq: alpha must be positive");
  const auto grid = detail::log_offsets(0.0, -8.0, 1.5, 128);
  auto f = [alpha](double eps) { return phi_alpha_quotient_eps(alpha, eps); };
  return detail::grid_sup(f, grid).value;
}

double phi_alpha_adjoint_sq(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("phi_alpha_adjoint_sq: alpha must be positive");
  auto g = [alpha](double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return 4.0 * x / ((1.0 + x) * (1.0 + x)) * zeta_1p(2.0 * alpha * x);
  };
  const double interior = detail::grid_sup(g, unit_interval_grid()).value;
  return std::max({interior, 2.0 / alpha, zeta(1.0 + 2.0 * alpha)});
}

BoundReport suite_for_phi_alpha(double alpha, unsigned n_in, unsigned K_out) {
  if (!(alpha > 0.0)) throw DomainError("suite_for_phi_alpha: alpha must be positive");
  BoundReport report;
  auto& e = report.entries;
  e.push_back(lower("genlower", zeta(1.0 + 2.0 * alpha), "zeta(2 Re phi(+inf)) = zeta(1 + 2 alpha)"));
  e.push_back(lower("adjoint_lower", phi_alpha_adjoint_sq(alpha),
                    "sup 4x/(1+x)^2 zeta(1 + 2 alpha x), limits included"));
  e.push_back(lower("matrix_lower", sigma_max_sq(phi_alpha_matrix(alpha, n_in, K_out)),
                    "largest singular value squared of the truncated matrix on powers of 2"));
  e.push_back(lower("kernel_S_lower", phi_alpha_kernel_sup_sq(alpha),
                    "sup over real sigma of the untruncated kernel quotient squared"));
  e.push_back(not_applicable("mpq_upper", false, "affine symbols only"));
  e.push_back(not_applicable("combo_upper", false, "affine symbols only"));
  e.push_back(not_applicable("smallnorm_upper", false, "affine symbols only"));
  e.push_back(not_applicable("newupper", false, "affine symbols only"));
  e.push_back(lower("brevig_lower", std::max(2.0 / alpha, zeta(1.0 + 2.0 * alpha)),
                    "max(2/alpha, zeta(1 + 2 alpha))"));
  e.push_back(upper("brevig_upper", std::max(2.0 / alpha, zeta(1.0 + alpha)),
                    "max(2/alpha, zeta(1 + alpha))"));
  return report;
}

}  // namespace compnorm
