#pragma once

// Real-argument special functions backing the transform kernels.

namespace phin {

/// Order of a Bessel or Struve function. Finite with |nu| < 100.
class BesselOrder {
 public:
  explicit BesselOrder(double nu);
  double value() const noexcept { return nu_; }

 private:
  double nu_;
};

/// Gamma function. Relative error <= 1e-13 on (0, 50]. Poles raise DomainError.
double gamma(double x);

/// log|Gamma(x)|. Used where Gamma itself would overflow.
double log_gamma(double x);

/// Sign of Gamma(x) (+1 or -1); DomainError at poles.
int gamma_sign(double x);

/// Bessel function of the first kind J_nu(x), x >= 0.
///
/// Ascending series below the switch point, Hankel's asymptotic expansion
/// above it, and three-term recurrence from a low order when the expansion
/// would not converge for large |nu|. x = 0 with non-integer nu < 0 is a
/// DomainError.
double bessel_j(BesselOrder nu, double x);

/// Bessel function of the second kind, large-argument expansion only.
/// Valid where bessel_hankel_converges(nu, x) holds; RangeError otherwise.
double bessel_y_asymptotic(BesselOrder nu, double x);

/// True when the Hankel expansion reaches double precision at (nu, x).
bool bessel_hankel_converges(BesselOrder nu, double x);

/// Struve function H_nu(x), x >= 0.
///
/// Ascending series (extended precision) for moderate x; for large x,
/// H_nu = Y_nu + (H_nu - Y_nu) with the asymptotic series of the difference.
/// AccuracyError if neither route reaches 1e-8 relative to max(|H_nu|, sqrt(2/(pi x))).
double struve_h(BesselOrder nu, double x);

/// H_nu(x) - Y_nu(x) from its large-argument asymptotic series, dropping the
/// first `skip_terms` terms. Exposed so callers can cancel leading terms
/// analytically.
double struve_minus_y_asymptotic(BesselOrder nu, double x, int skip_terms = 0);

}  // namespace phin
