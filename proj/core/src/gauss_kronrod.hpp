#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace phin::detail {

using ComplexFn = std::function<std::complex<double>(double)>;

struct GkResult {
  std::complex<double> value;
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct GkLimits {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 40;
  std::size_t max_intervals = 400'000;
};

/// Globally adaptive Gauss-Kronrod 7/15 over the partition given by `points`
/// (sorted, at least two). Intervals with the largest error are bisected first.
GkResult gk_adaptive(const ComplexFn& f, const std::vector<double>& points, const GkLimits& limits);

/// Single 15-point Kronrod panel with its Gauss-7 error estimate.
GkResult gk_panel(const ComplexFn& f, double a, double b);

}  // namespace phin::detail
