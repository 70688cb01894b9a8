#pragma once

#include <random>
#include <string>

#include "phin/haar.hpp"
#include "phin/kernel.hpp"

namespace phin::verify {

std::string fmt(double v, int digits);

enum class CoeffKind { even, odd, both };

/// Standard normal complex coefficients at a level in [jlo, jhi] with kmax in [0, kmax_hi].
HaarCoeffs random_coeffs(std::mt19937_64& rng, int jlo, int jhi, long kmax_hi, CoeffKind kind);

/// int |Phi_n c|^2 d omega over [-W, W], split at phase zeros, with the tail
/// extrapolated from the W/2 and W partial integrals.
double transform_norm_sq(Order n, const HaarCoeffs& c);

struct WatsonResult {
  double value;
  double upper;  // Z
};

/// int_0^Z J_mu(a z) J_mu(b z) / z dz, Z set by the tail bound 2 / (pi sqrt(ab) Z) <= 2.5e-4.
WatsonResult watson_partial(double mu, double a, double b);

struct ReflectionResult {
  double rel_l2;
};

/// Relative L2 distance on a window around the support between
/// Phi_n(P Phi_n c) and sign * f, with P a fine projection.
ReflectionResult double_transform_error(Order n, const HaarCoeffs& c, double sign);

/// Same with the double transform applied twice (even-only c).
ReflectionResult four_periodicity_error(Order n, const HaarCoeffs& c);

/// Worst |Phi_n v - lambda v| at omega in {0.5, 1, 2} for the imaginary
/// eigenvectors built from unit odd[0] at j = 2 (n = 1) and unit odd[1] at j = 3 (n = 2).
double imaginary_eigvec_residual();

struct StftReport {
  double energy_rel;
  double orth_abs;
  double recon_coarse;
  double recon_default;
};

StftReport stft_report();

}  // namespace phin::verify
