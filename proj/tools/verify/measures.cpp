#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <vector>

#include "phin/error.hpp"
#include "phin/quadrature.hpp"
#include "phin/specfun.hpp"
#include "phin/stft.hpp"
#include "phin/subspace.hpp"
#include "phin/transform.hpp"
#include "verify_internal.hpp"

namespace phin::verify {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Window where reflection errors are measured: twice the outer edge of the support.
double support_window(const HaarCoeffs& c) { return 2.0 * std::ldexp(static_cast<double>(c.size()), -c.j()); }

std::vector<double> midpoints(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  const double h = (hi - lo) / static_cast<double>(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + (static_cast<double>(i) + 0.5) * h;
  return out;
}

// Fine projection level and radius for the intermediate image; n = 1 images decay
// like 1/omega and need a much longer reach than n = 2.
struct FineGrid {
  int level;
  double reach;
};

FineGrid fine_grid(Order n) { return n.value() == 1 ? FineGrid{6, 2048.0} : FineGrid{7, 256.0}; }

// Phi_n (P Phi_n c) on the points ts.
std::vector<cplx> double_transform(Order n, const HaarCoeffs& c, const std::vector<double>& ts) {
  const FineGrid fg = fine_grid(n);
  const long kmax = static_cast<long>(std::ceil(std::ldexp(fg.reach, fg.level))) - 1;
  ProjectionGrid grid;
  grid.size = 16;
  while (static_cast<double>(grid.size) < 2.0 * grid.span_factor * static_cast<double>(kmax + 1)) grid.size *= 2;
  const HaarCoeffs fine = project(image_function(n, c), fg.level, kmax, grid);
  return AtomImageTable(n, fg.level, kmax, ts).apply(fine, Direction::forward);
}

double relative_l2(const std::vector<cplx>& got, const std::vector<cplx>& want) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    num += std::norm(got[i] - want[i]);
    den += std::norm(want[i]);
  }
  return std::sqrt(num / den);
}

}  // namespace

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

HaarCoeffs random_coeffs(std::mt19937_64& rng, int jlo, int jhi, long kmax_hi, CoeffKind kind) {
  std::uniform_int_distribution<int> level(jlo, jhi);
  std::uniform_int_distribution<long> top(0, kmax_hi);
  std::normal_distribution<double> normal;
  const int j = level(rng);
  const auto size = static_cast<std::size_t>(top(rng) + 1);
  HaarCoeffs::Vec even(size);
  HaarCoeffs::Vec odd(size);
  for (std::size_t k = 0; k < size; ++k) {
    if (kind != CoeffKind::odd) even[k] = {normal(rng), normal(rng)};
    if (kind != CoeffKind::even) odd[k] = {normal(rng), normal(rng)};
  }
  if (kind == CoeffKind::even) {
    for (auto& v : even) v = v.real();
  }
  if (kind == CoeffKind::odd) {
    for (auto& v : odd) v = v.real();
  }
  return HaarCoeffs(j, std::move(even), std::move(odd));
}

double transform_norm_sq(Order n, const HaarCoeffs& c) {
  const int nn = n.value();
  const double outer = std::ldexp(static_cast<double>(c.size()), -c.j());
  const double reach = nn == 1 ? 400.0 : 40.0;
  std::vector<double> zeros;
  for (int m = 1;; ++m) {
    const double w = std::pow(nn * kPi * m, 1.0 / nn) / outer;
    if (w >= reach) break;
    zeros.push_back(w);
  }
  auto density = [&](double w) {
    return cplx(std::norm(transform_coeffs(n, c, Direction::forward, w)) +
                std::norm(transform_coeffs(n, c, Direction::forward, -w)));
  };
  const QuadOpts opts{1e-12, 1e-10, 40, 0.0, false};
  auto part = [&](double lo, double hi) {
    std::vector<double> inner;
    for (double z : zeros)
      if (z > lo && z < hi) inner.push_back(z);
    return integrate(density, lo, hi, inner, opts).value.real();
  };
  const double near = part(0.0, 0.5 * reach);
  const double far = part(0.5 * reach, reach);
  // Mean-square tail ~ A / omega^(n+1), so the missing mass is ~ A' / W^n.
  const double scale = std::pow(2.0, nn);
  return near + far + far / (scale - 1.0);
}

WatsonResult watson_partial(double mu, double a, double b) {
  const double upper = 2.0 / (kPi * std::sqrt(a * b) * 2.5e-4);
  const BesselOrder nu(mu);
  auto integrand = [&](double z) { return bessel_j(nu, a * z) * bessel_j(nu, b * z) / z; };
  const double first = kPi / std::max(a, b);
  // z = s^p with p = 1 / (2 mu) removes the z^(2 mu - 1) endpoint singularity.
  const double p = 0.5 / mu;
  const double s1 = std::pow(first, 1.0 / p);
  const QuadOpts opts{1e-10, 1e-10, 50, 0.0, false};
  const double head =
      integrate([&](double s) { return cplx(s > 0.0 ? integrand(std::pow(s, p)) * p * std::pow(s, p - 1.0) : 0.0); },
                0.0, s1, {}, opts)
          .value.real();
  std::vector<double> breaks;
  for (double z = 2.0 * first; z < upper; z += first) breaks.push_back(z);
  const double body = integrate([&](double z) { return cplx(integrand(z)); }, first, upper, breaks, opts).value.real();
  return {head + body, upper};
}

ReflectionResult double_transform_error(Order n, const HaarCoeffs& c, double sign) {
  const double w = support_window(c);
  const std::vector<double> ts = midpoints(-w, w, 400);
  std::vector<cplx> want(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) want[i] = sign * reconstruct_eval(c, ts[i]);
  return {relative_l2(double_transform(n, c, ts), want)};
}

ReflectionResult four_periodicity_error(Order n, const HaarCoeffs& c) {
  if (!c.even_only()) throw DomainError("four_periodicity_error: needs even-only coefficients");
  // P_j Phi_n P Phi_n c in coefficient space: by symmetry of the kernel, the
  // level-j average of Phi_n(P F) against phi+_{j,k} is sum_K P_K int_{cell K} E_{j,k}.
  const FineGrid fg = fine_grid(n);
  const long kmax = static_cast<long>(std::ceil(std::ldexp(fg.reach, fg.level))) - 1;
  ProjectionGrid grid;
  grid.size = 16;
  while (static_cast<double>(grid.size) < 2.0 * grid.span_factor * static_cast<double>(kmax + 1)) grid.size *= 2;
  const HaarCoeffs fine = project(image_function(n, c), fg.level, kmax, grid);
  constexpr double node[2] = {0.3399810435848562648, 0.8611363115940525752};
  constexpr double weight[2] = {0.6521451548625461426, 0.3478548451374538574};
  const double width = std::ldexp(1.0, -fg.level);
  HaarCoeffs::Vec back(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const HaarIndex idx(c.j(), static_cast<long>(k));
    cplx acc;
    for (long kk = 0; kk <= kmax; ++kk) {
      const double mid = (static_cast<double>(kk) + 0.5) * width;
      double cell = 0.0;
      for (int q = 0; q < 2; ++q) {
        const double d = 0.5 * width * node[q];
        cell += weight[q] * (atom_image(n, idx, mid - d) + atom_image(n, idx, mid + d));
      }
      acc += fine.even()[static_cast<std::size_t>(kk)] * (0.5 * width * cell);
    }
    back[k] = acc / (0.5 * std::ldexp(1.0, -c.j()));
  }
  const HaarCoeffs once(c.j(), std::move(back), HaarCoeffs::Vec(c.size()));
  const double w = support_window(c);
  const std::vector<double> ts = midpoints(-w, w, 400);
  std::vector<cplx> want(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) want[i] = reconstruct_eval(c, ts[i]);
  return {relative_l2(double_transform(n, once, ts), want)};
}

double imaginary_eigvec_residual() {
  struct Case {
    int n;
    int j;
    std::size_t k;
  };
  double worst = 0.0;
  for (const Case cs : {Case{1, 2, 0}, Case{2, 3, 1}}) {
    HaarCoeffs::Vec odd(cs.k + 1);
    odd[cs.k] = 1.0;
    const HaarCoeffs c(cs.j, HaarCoeffs::Vec(cs.k + 1), odd);
    const ImaginaryEigenvector v = plusminus_i_eigvec(Order(cs.n), c);
    const double lo = std::ldexp(static_cast<double>(cs.k), -cs.j);
    const double hi = std::ldexp(static_cast<double>(cs.k + 1), -cs.j);
    std::vector<double> breaks{-hi, 0.0, hi};
    if (lo > 0.0) breaks = {-hi, -lo, 0.0, lo, hi};
    const FunctionExpr fv =
        FunctionExpr::custom(v.eval, Parity::odd, TailClass::algebraic, std::numeric_limits<double>::infinity(),
                             breaks, "imaginary eigenvector");
    for (double w : {0.5, 1.0, 2.0}) {
      cplx got;
      try {
        got = phi_integral(Order(cs.n), fv, w, QuadOpts{1e-6, 1e-6, 40, 0.0, true}).value;
      } catch (const AccuracyError& e) {
        got = e.estimate();
      }
      worst = std::max(worst, std::abs(got - v.eigenvalue * v.eval(w)));
    }
  }
  return worst;
}

StftReport stft_report() {
  StftReport rep{};
  const FunctionExpr g1 = FunctionExpr::n_gaussian(1);
  const FunctionExpr window = FunctionExpr::scaled(std::pow(kPi, -0.25), g1);
  const UniformAxis omega = default_stft_omega_axis();
  const UniformAxis t = default_stft_t_axis();

  for (int n = 1; n <= 2; ++n) {
    for (const FunctionExpr& h : {g1, FunctionExpr::n_gaussian(2), FunctionExpr::eigen(n, 1)}) {
      const double want = inner_product(h, h).value.real();
      const Spectrogram s = stft_compute(Order(n), window, h, omega, t);
      rep.energy_rel = std::max(rep.energy_rel, std::fabs(stft_energy(s) - want) / want);
    }
  }

  const FunctionExpr even_atom = FunctionExpr::haar_even(HaarIndex(0, 0));
  const FunctionExpr odd_atom = FunctionExpr::haar_odd(HaarIndex(0, 0));
  const FunctionExpr g1_wide = FunctionExpr::dilate(2.0, g1);
  const cplx orth_atoms = stft_orthogonality(Order(1), even_atom, odd_atom, g1, g1, omega, t);
  const cplx orth_same = stft_orthogonality(Order(1), window, window, g1, g1, omega, t);
  const cplx orth_dilated = stft_orthogonality(Order(1), window, window, g1, g1_wide, omega, t);
  rep.orth_abs = std::max({std::abs(orth_atoms), std::abs(orth_same - std::sqrt(kPi)),
                           std::abs(orth_dilated - inner_product(g1, g1_wide).value)});

  const std::vector<double> ts = midpoints(-3.0, 3.0, 48);
  std::vector<cplx> want(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) want[i] = g1(ts[i]);
  auto residual = [&](double step) {
    const UniformAxis w = UniformAxis::from_range(-8.0, 8.0, step);
    const UniformAxis tt = UniformAxis::from_range(-6.0, 6.0, step);
    const Spectrogram s = stft_compute(Order(1), window, g1, w, tt);
    return relative_l2(StftReconstructor(s, window)(ts), want);
  };
  rep.recon_coarse = residual(1.0 / 8.0);
  rep.recon_default = residual(1.0 / 16.0);
  return rep;
}

}  // namespace phin::verify
