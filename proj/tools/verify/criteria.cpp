#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "phin/error.hpp"
#include "phin/hilbert.hpp"
#include "phin/kernel.hpp"
#include "phin/quadrature.hpp"
#include "phin/specfun.hpp"
#include "phin/stft.hpp"
#include "phin/subspace.hpp"
#include "phin/transform.hpp"
#include "verify.hpp"
#include "verify_internal.hpp"

namespace phin::verify {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

CheckResult make(std::string name, double metric, double tol, std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.metric = metric;
  r.tolerance = tol;
  r.pass = std::isfinite(metric) && metric <= tol;
  r.detail = std::move(detail);
  return r;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Amplitude of c_n at large |eta|: sqrt(n / 2 pi) |eta|^((n-1)/2).
double kernel_envelope(int n, double eta) {
  return std::sqrt(n / (2.0 * kPi)) * std::pow(std::max(1.0, std::fabs(eta)), 0.5 * (n - 1));
}

CheckResult gaussian_invariance() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const auto g = FunctionExpr::n_gaussian(n);
    for (double w : {0.0, 0.5, 1.0, 2.0, 3.0}) {
      const auto r = phi_integral(Order(n), g, w);
      worst = std::max(worst, std::abs(r.value - gaussian_image(Order(n), w)));
    }
  }
  const double secs = elapsed(t0);
  auto res = make("1 n-Gaussian invariance", worst, 1e-6, "runtime " + fmt(secs, 3) + " s <= 10 s");
  res.pass = res.pass && secs <= 10.0;
  return res;
}

CheckResult fourier_reduction() {
  std::mt19937_64 rng(0x5eed0002);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double eta = dist(rng);
    const cplx want = std::polar(1.0 / std::sqrt(2.0 * kPi), -eta);
    worst = std::max(worst, std::abs(kernel_full(Order(1), eta) - want));
  }
  return make("2 Fourier reduction", worst, 1e-12);
}

CheckResult kernel_dual_path() {
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i <= 350; ++i) {
      const double eta = 0.5 + 0.01 * i;
      const double a = kernel_even_series(Order(n), eta);
      const double b = kernel_even_bessel(Order(n), eta);
      worst = std::max(worst, std::fabs(a - b) / std::max(std::fabs(b), kernel_envelope(n, eta)));
    }
  }
  bool monotone = true;
  std::string trail;
  for (int n = 1; n <= 3; ++n) {
    double prev = std::numeric_limits<double>::infinity();
    for (double eta : {10.0, 20.0, 40.0}) {
      // Worst envelope-relative error over one local period centred at eta.
      const double period = 2.0 * kPi / std::pow(eta, n - 1);
      double err = 0.0;
      for (int i = 0; i <= 200; ++i) {
        const double x = eta + period * (i / 200.0 - 0.5);
        err = std::max(err, std::fabs(kernel_even(Order(n), x) - kernel_asymptotic(Order(n), x)) /
                                kernel_envelope(n, x));
      }
      // n = 1 is exact up to rounding, so ties at the rounding floor count as non-increasing.
      if (!(err < prev || err < 1e-13)) monotone = false;
      prev = err;
      trail += (trail.empty() ? "" : " ") + fmt(err, 2);
    }
  }
  auto res = make("3 kernel dual-path", worst, 1e-10, "asymptotic errors [" + trail + "]");
  res.pass = res.pass && monotone;
  return res;
}

CheckResult phi2_closed_vs_numeric() {
  // c_2 on a wide grid, tapered, then the FFT Hilbert transform: s_2 = -H c_2.
  const std::size_t size = std::size_t{1} << 20;
  const double half_width = std::sqrt(kPi * static_cast<double>(size) / (8.0 * 0.9));
  const double h = 2.0 * half_width / static_cast<double>(size);
  SampledGrid grid{-half_width, h, std::vector<cplx>(size)};
  for (std::size_t i = 0; i < size; ++i) {
    const double t = grid.at(i);
    const double x = std::fabs(t) / half_width;
    const double w = x <= 0.6 ? 1.0 : (x >= 0.9 ? 0.0 : 0.5 * (1.0 + std::cos(kPi * (x - 0.6) / 0.3)));
    grid.values[i] = w > 0.0 ? -kernel_even(Order(2), t) * w : 0.0;
  }
  const SampledGrid hs = discrete_hilbert(grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    const double t = grid.at(i);
    if (std::fabs(t) > 5.0) continue;
    worst = std::max(worst, std::fabs(hs.values[i].real() - kernel_odd(Order(2), t)));
  }
  return make("4 phi_2 closed form vs numeric Hilbert", worst, 1e-3);
}

CheckResult isometry() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0x5eed0005);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 2;
    const HaarCoeffs c = random_coeffs(rng, 0, 2, 8, CoeffKind::both);
    const double want = c.norm_sq();
    const double got = transform_norm_sq(Order(n), c);
    worst = std::max(worst, std::fabs(got - want) / want);
  }
  const double secs = elapsed(t0);
  auto res = make("5 isometry", worst, 1e-3, "runtime " + fmt(secs, 3) + " s <= 120 s");
  res.pass = res.pass && secs <= 120.0;
  return res;
}

CheckResult watson() {
  double worst = 0.0;
  for (double mu : {0.5, 0.25, 1.0 / 6.0}) {
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{1.0, 2.0}, std::pair{0.5, 3.0}}) {
      const WatsonResult w = watson_partial(mu, a, b);
      worst = std::max(worst, std::fabs(w.value - 0.5 / mu * std::pow(a / b, mu)));
    }
  }
  return make("6 Watson identities", worst, 1e-3);
}

CheckResult reflection() {
  std::mt19937_64 rng(0x5eed0007);
  double worst = 0.0;
  std::string detail;
  for (int n = 1; n <= 2; ++n) {
    const HaarCoeffs ce = random_coeffs(rng, 1, 1, 3, CoeffKind::even);
    const HaarCoeffs co = random_coeffs(rng, 1, 1, 3, CoeffKind::odd);
    const ReflectionResult re = double_transform_error(Order(n), ce, 1.0);
    const ReflectionResult ro = double_transform_error(Order(n), co, -1.0);
    const ReflectionResult rf = four_periodicity_error(Order(n), ce);
    worst = std::max({worst, re.rel_l2, ro.rel_l2, rf.rel_l2});
    detail += "n=" + std::to_string(n) + " even " + fmt(re.rel_l2, 2) + " odd " + fmt(ro.rel_l2, 2) + " four " +
              fmt(rf.rel_l2, 2) + "; ";
  }
  return make("7 reflection and four-periodicity", worst, 1e-2, detail);
}

CheckResult dilation() {
  double worst = 0.0;
  for (int n = 1; n <= 2; ++n) {
    const HaarIndex atom(0, 0);
    const FunctionExpr fs[2] = {FunctionExpr::n_gaussian(n), FunctionExpr::haar_even(atom)};
    for (int which = 0; which < 2; ++which) {
      for (double alpha : {0.5, 2.0, 3.0}) {
        const FunctionExpr d = dilate(alpha, fs[which]);
        for (double w : {0.5, 1.0, 2.0}) {
          const cplx lhs = phi_integral(Order(n), d, w, QuadOpts{1e-11, 1e-11, 40, 0.0, true}).value;
          const double img = which == 0 ? gaussian_image(Order(n), alpha * w) : atom_image(Order(n), atom, alpha * w);
          worst = std::max(worst, std::abs(lhs - std::sqrt(alpha) * img));
        }
      }
    }
  }
  return make("8 dilation intertwining", worst, 1e-6);
}

CheckResult eigenfunctions() {
  double worst = 0.0;
  for (int n = 1; n <= 2; ++n) {
    for (int m = 0; m <= 2; ++m) {
      const EigenSpec spec(Order(n), m);
      const FunctionExpr f = FunctionExpr::eigen(n, m);
      for (int i = 0; i <= 16; ++i) {
        const double w = -2.0 + 0.25 * i;
        const cplx got = phi_integral(Order(n), f, w, QuadOpts{1e-11, 1e-11, 40, 0.0, true}).value;
        worst = std::max(worst, std::abs(got - spec.eigenvalue() * eigenfunction_eval(spec, w)));
      }
    }
  }
  const double prop3 = imaginary_eigvec_residual();
  auto res = make("9 eigenfunctions", worst, 1e-5, "imaginary eigenvector residual " + fmt(prop3, 2) + " <= 1e-3");
  res.pass = res.pass && prop3 <= 1e-3;
  return res;
}

CheckResult stft_checks() {
  const auto t0 = std::chrono::steady_clock::now();
  const StftReport rep = stft_report();
  const double secs = elapsed(t0);
  const double worst = std::max({rep.energy_rel, rep.orth_abs, rep.recon_default / 5.0});
  std::string detail = "energy " + fmt(rep.energy_rel, 2) + ", bilinear " + fmt(rep.orth_abs, 2) +
                       ", reconstruction " + fmt(rep.recon_coarse, 2) + " -> " + fmt(rep.recon_default, 2) +
                       " (<= 5e-2), runtime " + fmt(secs, 3) + " s <= 300 s";
  auto res = make("10 STFT energy, bilinear form, reconstruction", worst, 1e-2, detail);
  res.pass = res.pass && rep.recon_default <= 5e-2 && rep.recon_default < rep.recon_coarse && secs <= 300.0;
  return res;
}

}  // namespace

std::vector<Check> criteria() {
  return {
      {"1 n-Gaussian invariance", gaussian_invariance},
      {"2 Fourier reduction", fourier_reduction},
      {"3 kernel dual-path", kernel_dual_path},
      {"4 phi_2 closed form vs numeric Hilbert", phi2_closed_vs_numeric},
      {"5 isometry", isometry},
      {"6 Watson identities", watson},
      {"7 reflection and four-periodicity", reflection},
      {"8 dilation intertwining", dilation},
      {"9 eigenfunctions", eigenfunctions},
      {"10 STFT energy, bilinear form, reconstruction", stft_checks},
  };
}

}  // namespace phin::verify
