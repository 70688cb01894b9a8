#pragma once

#include <functional>

#include "phin/grid.hpp"

// Hilbert transform with the convention Hf(t) = (1/pi) p.v. int f(tau)/(t - tau) dtau,
// so that H cos = sin and the spectral multiplier is -i sgn(xi).

namespace phin {

/// Closed interval [lo, hi] with lo < hi.
struct Interval {
  double lo;
  double hi;
  Interval(double lo, double hi);
};

/// Hilbert transform of the indicator of `iv`: (1/pi) ln|(t - lo)/(t - hi)|.
/// SingularityError at either endpoint.
double hilbert_indicator(const Interval& iv, double t);

/// psi_{j,k} = H phi+_{j,k}, the Hilbert transform of the even Haar atom.
/// Odd in t; SingularityError at +-k/2^j (k > 0) and +-(k+1)/2^j.
double odd_atom_eval(int j, long k, double t);

/// FFT-based Hilbert transform of uniformly sampled data. The length must be
/// a power of two (ShapeError otherwise). The zero-frequency and Nyquist bins
/// are dropped, so only zero-mean inputs round-trip under H^2 = -I. The outer
/// 10% at each edge (see trusted_interior) is affected by wrap-around.
SampledGrid discrete_hilbert(const SampledGrid& g);

/// (1/pi) p.v. int_lo^hi f(tau)/(t - tau) dtau by Gauss-Kronrod on the
/// symmetrised integrand around t.
double hilbert_principal_value(const std::function<double(double)>& f, double lo, double hi, double t,
                               double tol = 1e-12);

}  // namespace phin
