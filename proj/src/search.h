#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace compnorm::detail {

struct SupResult {
  double value;
  double arg;
};

// Max of f over a sorted grid, then 40 golden-section steps on the bracket
// formed by the best point's neighbours.
inline SupResult grid_sup(const std::function<double(double)>& f,
                          const std::vector<double>& grid, int golden_iters = 40) {
  std::size_t best = 0;
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = f(grid[i]);
    if (values[i] > values[best] || std::isnan(values[best])) best = i;
  }
  SupResult result{values[best], grid[best]};
  double lo = grid[best == 0 ? 0 : best - 1];
  double hi = grid[best + 1 < grid.size() ? best + 1 : best];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < golden_iters && hi > lo; ++it) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
    if (f1 > result.value) result = {f1, x1};
    if (f2 > result.value) result = {f2, x2};
  }
  return result;
}

// n points lo + 10^u with u evenly spaced in [u_min, u_max].
inline std::vector<double> log_offsets(double lo, double u_min, double u_max,
                                       std::size_t n) {
  std::vector<double> grid;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = u_min + (u_max - u_min) * double(i) / double(n - 1);
    grid.push_back(lo + std::pow(10.0, u));
  }
  return grid;
}

}  // namespace compnorm::detail
