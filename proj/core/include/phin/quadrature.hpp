#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "phin/function_expr.hpp"
#include "phin/kernel.hpp"

namespace phin {

struct QuadOpts {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  /// Bisection depth limit per initial panel, at most 60.
  int max_depth = 40;
  /// Integration radius in t; 0 selects default_truncation_radius(n). Grown
  /// automatically while the kernel-growth tail bound exceeds abs_tol.
  double truncation_radius = 0.0;
  /// Split panels at the kernel phase zeros (omega t)^n / n = m pi.
  bool oscillation_split = true;
};

struct QuadResult {
  std::complex<double> value;
  /// Quadrature error estimate plus tail bound (or, for slowly decaying
  /// integrands, the change between two cutoff radii).
  double error = 0.0;
  /// Radius actually used.
  double radius = 0.0;
  std::size_t evaluations = 0;
};

/// 30 for n = 1, 8 otherwise.
double default_truncation_radius(Order n);

/// int phi_n(omega t) f(t) dt by adaptive Gauss-Kronrod on [0, R] using the
/// even/odd split 2 int c_n f+ + 2i int s_n f-. Slowly (1/|t|) decaying f are
/// summed with a smooth cutoff whose radius is varied to estimate the error.
/// AccuracyError when the tolerance is not met; DomainError when the tail test
/// fails for a supposedly rapidly decaying f.
QuadResult phi_integral(Order n, const FunctionExpr& f, double omega, const QuadOpts& opts = {});

/// int f conj(g) dt.
QuadResult inner_product(const FunctionExpr& f, const FunctionExpr& g, const QuadOpts& opts = {});

/// Adaptive Gauss-Kronrod of a complex integrand over [lo, hi] with extra breakpoints.
QuadResult integrate(const std::function<std::complex<double>(double)>& fn, double lo, double hi,
                     std::vector<double> breakpoints = {}, const QuadOpts& opts = {});

}  // namespace phin
