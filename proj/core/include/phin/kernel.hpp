#pragma once

#include <complex>

// Kernels phi_n = c_n + i s_n of the transform family.

namespace phin {

/// Transform index n, 1 <= n <= 8.
class Order {
 public:
  explicit Order(int n);
  int value() const noexcept { return n_; }

 private:
  int n_;
};

/// Kernel components at eta = omega * t.
struct KernelValue {
  double even;
  double odd;
  double eta;
  std::complex<double> full() const noexcept { return {even, odd}; }
};

/// Series coefficient c(n;l) = (-1)^l n / ((2n)^(2l+1/(2n)) Gamma(l+1/(2n)) l!),
/// evaluated in log space. RangeError for l > 200.
double coeff_c(Order n, int l);

/// Even kernel c_n. Power series near the origin, Bessel closed form
/// c_n(eta) = |eta|^(n-1/2) J_{-1+1/(2n)}(|eta|^n/n) / 2 elsewhere.
double kernel_even(Order n, double eta);

/// Power series for c_n summed in quad precision. Independent route used to
/// cross-check the closed form; slow, and limited to |eta|^n/n <= 40.
double kernel_even_series(Order n, double eta);

/// Bessel closed form for c_n at any eta (the eta = 0 limit is c(n;0)).
double kernel_even_bessel(Order n, double eta);

/// Odd kernel s_n = -H c_n. Closed forms for n = 1, 2; for n >= 3 an
/// interpolated FFT Hilbert table (accuracy about 1e-4) that raises RangeError
/// outside odd_kernel_trusted_radius(n).
double kernel_odd(Order n, double eta);

/// c_n + i s_n.
std::complex<double> kernel_full(Order n, double eta);

/// Both components at once.
KernelValue kernel_value(Order n, double eta);

/// Large-argument form sqrt(n/2pi) |eta|^((n-1)/2) cos(|eta|^n/n + (pi/4)(1-1/n)).
/// DomainError for |eta| < 1.
double kernel_asymptotic(Order n, double eta);

/// H c_2 from the Struve closed form; kernel_odd(2, eta) is its negative.
double hilbert_c2_closed(double eta);

/// Recorded constant C_n with |c_n(eta)| <= C_n (1 + |eta|^(n-1/2)) and the
/// same bound for |s_n|.
double kernel_bound_constant(Order n);

/// Radius within which the tabulated s_n (n >= 3) is trusted; infinity for n <= 2.
/// Builds the table on first use.
double odd_kernel_trusted_radius(Order n);

/// Number of samples of the s_n table (environment PHIN_HILBERT_GRID, default 2^20).
std::size_t odd_kernel_grid_size();

}  // namespace phin
