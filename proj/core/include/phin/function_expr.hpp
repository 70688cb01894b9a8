#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "phin/grid.hpp"
#include "phin/haar.hpp"

namespace phin {

enum class Parity { even, odd, none };

/// How fast |f(t)| decays: zero beyond a radius, faster than any power, or like 1/|t|.
enum class TailClass { compact, rapid, algebraic };

/// Immutable descriptor of a test function. Copies share the expression tree.
class FunctionExpr {
 public:
  struct Node;

  std::complex<double> operator()(double t) const;
  Parity parity() const noexcept;
  TailClass tail() const noexcept;
  /// A radius beyond which |f| <= tol (infinity for algebraic tails).
  double decay_radius(double tol) const;
  /// Sorted points in [lo, hi] where f is not smooth (jumps, kinks, log singularities).
  std::vector<double> breakpoints(double lo, double hi) const;
  std::string describe() const;

  /// g_n(t) = exp(-t^(2n)/(2n)).
  static FunctionExpr n_gaussian(int n);
  /// Even Haar atom phi+_{j,k}.
  static FunctionExpr haar_even(HaarIndex idx);
  /// Odd atom psi_{j,k} = H phi+_{j,k}.
  static FunctionExpr haar_odd(HaarIndex idx);
  /// Akhiezer eigenfunction of order n, derivative order m.
  static FunctionExpr eigen(int n, int m);
  /// f(t/alpha)/sqrt(alpha); DomainError for alpha <= 0.
  static FunctionExpr dilate(double alpha, FunctionExpr f);
  /// f(t - shift).
  static FunctionExpr shift(double shift, FunctionExpr f);
  /// Pointwise product.
  static FunctionExpr product(FunctionExpr f, FunctionExpr g);
  /// Weighted sum.
  static FunctionExpr sum(std::vector<std::pair<std::complex<double>, FunctionExpr>> terms);
  static FunctionExpr scaled(std::complex<double> weight, FunctionExpr f);
  /// Linear interpolation of samples, zero outside the grid.
  static FunctionExpr samples(SampledGrid grid);
  /// Function represented by Haar coefficients.
  static FunctionExpr haar_coeffs(HaarCoeffs c);
  /// Arbitrary callable with declared structure.
  static FunctionExpr custom(std::function<std::complex<double>(double)> fn, Parity parity, TailClass tail,
                             double radius, std::vector<double> breakpoints, std::string name);

 private:
  explicit FunctionExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace phin
