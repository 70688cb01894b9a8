#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "phin/function_expr.hpp"
#include "phin/haar.hpp"
#include "phin/kernel.hpp"

namespace phin {

/// Forward transform or its adjoint (which is also the inverse).
enum class Direction { forward, adjoint };

/// Even eigenfunction (alpha d/dalpha)^m (alpha^(1/4n) exp(-alpha x^(2n)/2n)) at alpha = 1.
struct EigenSpec {
  Order n;
  int m;
  EigenSpec(Order n, int m);
  /// (-1)^m.
  double eigenvalue() const noexcept { return m % 2 == 0 ? 1.0 : -1.0; }
};

/// Transform of the even atom phi+_{j,k}:
/// (sqrt(a) J_mu(alpha a^n) - sqrt(b) J_mu(alpha b^n)) / (2 sqrt|omega|),
/// mu = 1/(2n), alpha = |omega|^n/n, b = k/2^j, a = (k+1)/2^j. Even in omega.
double atom_image(Order n, HaarIndex idx, double omega);

/// Transform of the function with coefficients c, at one frequency.
std::complex<double> transform_coeffs(Order n, const HaarCoeffs& c, Direction dir, double omega);

/// Same on many frequencies, sharing one Bessel evaluation per atom edge.
std::vector<std::complex<double>> transform_coeffs(Order n, const HaarCoeffs& c, Direction dir,
                                                   const std::vector<double>& omegas);

/// Edge terms sqrt(x_p) J_mu(alpha x_p^n), x_p = p/2^j, p = 0..kmax+1, tabulated
/// for a fixed set of frequencies so that many coefficient sets can be
/// transformed with one Bessel evaluation per edge and frequency.
class AtomImageTable {
 public:
  AtomImageTable(Order n, int j, long kmax, std::vector<double> omegas);

  const std::vector<double>& omegas() const noexcept { return omegas_; }
  long kmax() const noexcept { return kmax_; }
  /// Transform of c (same level, c.kmax() <= kmax()) at omegas()[i].
  std::complex<double> apply(const HaarCoeffs& c, Direction dir, std::size_t i) const;
  std::vector<std::complex<double>> apply(const HaarCoeffs& c, Direction dir) const;

 private:
  Order n_;
  int j_;
  long kmax_;
  std::vector<double> omegas_;
  std::vector<double> edges_;  // row-major [omega][p]
};

/// g_n(omega), the fixed point of the transform.
double gaussian_image(Order n, double omega);

/// exp(-u) Q_m(u), u = x^(2n)/(2n). RangeError for m > 8.
double eigenfunction_eval(const EigenSpec& spec, double x);

/// Coefficients of Q_m in powers of u (index = power).
std::vector<double> eigen_polynomial(const EigenSpec& spec);

/// An eigenvector of eigenvalue i or -i built from an odd-only coefficient set.
struct ImaginaryEigenvector {
  /// The vector as a function of t.
  std::function<std::complex<double>(double)> eval;
  std::complex<double> eigenvalue;
  /// True when g - i Phi g was used (eigenvalue i), false for -i g + Phi g.
  bool from_first_case;
};

/// Build g - i Phi g (eigenvalue i) or, if that vanishes, -i g + Phi g
/// (eigenvalue -i). DegenerateError for zero or non-odd input.
ImaginaryEigenvector plusminus_i_eigvec(Order n, const HaarCoeffs& c);

/// f(t/alpha)/sqrt(alpha). DomainError for alpha <= 0.
FunctionExpr dilate(double alpha, const FunctionExpr& f);

/// Phi_n c as a function of omega.
FunctionExpr image_function(Order n, const HaarCoeffs& c, Direction dir = Direction::forward);

}  // namespace phin
