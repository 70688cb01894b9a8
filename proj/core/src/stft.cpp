#include "phin/stft.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "phin/error.hpp"
#include "phin/transform.hpp"

namespace phin {

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [=, &body] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    }));
  }
  for (auto& j : jobs) j.get();
}

double trapezoid_weight(const UniformAxis& axis, std::size_t i) {
  if (axis.size() == 1) return 1.0;
  return (i == 0 || i + 1 == axis.size()) ? 0.5 * axis.step : axis.step;
}

long atoms_for_radius(double radius, int level) {
  return std::max(0L, static_cast<long>(std::ceil(std::ldexp(radius, level))) - 1);
}

std::vector<double> axis_points(const UniformAxis& a) {
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i];
  return v;
}

}  // namespace

Spectrogram::Spectrogram(Order n, UniformAxis omega, UniformAxis t, std::vector<std::complex<double>> values,
                         double window_norm_sq)
    : n_(n), omega_(omega), t_(t), values_(std::move(values)), window_norm_sq_(window_norm_sq) {
  if (values_.size() != omega_.size() * t_.size()) throw ShapeError("Spectrogram: values do not match the grids");
  if (!(window_norm_sq_ > 0.0)) throw DomainError("Spectrogram: window norm must be positive");
}

UniformAxis default_stft_omega_axis() { return UniformAxis::from_range(-8.0, 8.0, 1.0 / 16.0); }
UniformAxis default_stft_t_axis() { return UniformAxis::from_range(-6.0, 6.0, 1.0 / 16.0); }

Spectrogram stft_compute(Order n, const FunctionExpr& g, const FunctionExpr& h, const UniformAxis& omega,
                         const UniformAxis& t, const StftOptions& opts) {
  const double norm_sq = inner_product(g, g).value.real();
  if (!(norm_sq > 0.0)) throw DegenerateError("stft_compute: window has zero norm");
  std::vector<std::complex<double>> values(omega.size() * t.size());
  const std::vector<double> omegas = axis_points(omega);

  if (opts.mode == StftMode::quadrature) {
    parallel_for(t.size(), opts.threads, [&](std::size_t it) {
      const FunctionExpr p = FunctionExpr::product(FunctionExpr::shift(t[it], g), h);
      for (std::size_t iw = 0; iw < omega.size(); ++iw)
        values[iw * t.size() + it] = phi_integral(n, p, omegas[iw], opts.quad).value;
    });
    return Spectrogram(n, omega, t, std::move(values), norm_sq);
  }

  // Every column shares the edge table; size it for the widest product.
  std::vector<long> kmax(t.size());
  for (std::size_t it = 0; it < t.size(); ++it) {
    const FunctionExpr p = FunctionExpr::product(FunctionExpr::shift(t[it], g), h);
    const double radius = p.tail() == TailClass::algebraic ? 2.0 * std::max(std::fabs(t[it]), 1.0) + 8.0
                                                           : p.decay_radius(1e-12);
    kmax[it] = atoms_for_radius(std::min(radius, 64.0), opts.level);
  }
  const long widest = *std::max_element(kmax.begin(), kmax.end());
  const AtomImageTable table(n, opts.level, widest, omegas);
  parallel_for(t.size(), opts.threads, [&](std::size_t it) {
    const FunctionExpr p = FunctionExpr::product(FunctionExpr::shift(t[it], g), h);
    const HaarCoeffs c = project(p, opts.level, kmax[it], opts.projection);
    for (std::size_t iw = 0; iw < omega.size(); ++iw)
      values[iw * t.size() + it] = table.apply(c, Direction::forward, iw);
  });
  return Spectrogram(n, omega, t, std::move(values), norm_sq);
}

StftReconstructor::StftReconstructor(const Spectrogram& spec, FunctionExpr g, int level, ProjectionGrid grid)
    : n_(spec.order()), tau_(spec.t()), window_norm_sq_(spec.window_norm_sq()), g_(std::move(g)), level_(level) {
  const UniformAxis& w = spec.omega();
  const double reach = std::max(std::fabs(w.lo), std::fabs(w.hi()));
  const long kmax = atoms_for_radius(reach, level);
  slices_.reserve(tau_.size());
  for (std::size_t it = 0; it < tau_.size(); ++it) {
    SampledGrid slice{w.lo, w.step, std::vector<std::complex<double>>(w.size())};
    for (std::size_t iw = 0; iw < w.size(); ++iw) slice.values[iw] = spec.at(iw, it);
    slices_.push_back(project(FunctionExpr::samples(std::move(slice)), level, kmax, grid));
  }
}

std::vector<std::complex<double>> StftReconstructor::operator()(const std::vector<double>& ts) const {
  std::vector<double> reflected(ts.size());
  std::transform(ts.begin(), ts.end(), reflected.begin(), [](double v) { return -v; });
  const AtomImageTable table(n_, level_, slices_.front().kmax(), reflected);
  std::vector<std::complex<double>> out(ts.size());
  for (std::size_t q = 0; q < ts.size(); ++q) {
    std::complex<double> acc;
    for (std::size_t it = 0; it < tau_.size(); ++it) {
      const std::complex<double> window = std::conj(g_(ts[q] - tau_[it]));
      if (window == 0.0) continue;
      acc += trapezoid_weight(tau_, it) * window * table.apply(slices_[it], Direction::forward, q);
    }
    out[q] = acc / window_norm_sq_;
  }
  return out;
}

std::complex<double> StftReconstructor::operator()(double t) const { return (*this)(std::vector<double>{t}).front(); }

std::complex<double> stft_reconstruct(const Spectrogram& spec, const FunctionExpr& g, double t, int level) {
  return StftReconstructor(spec, g, level)(t);
}

std::complex<double> stft_inner(const Spectrogram& a, const Spectrogram& b) {
  if (a.omega().size() != b.omega().size() || a.t().size() != b.t().size() || a.omega().lo != b.omega().lo ||
      a.omega().step != b.omega().step || a.t().lo != b.t().lo || a.t().step != b.t().step)
    throw ShapeError("stft_inner: spectrogram grids differ");
  std::complex<double> acc;
  for (std::size_t iw = 0; iw < a.omega().size(); ++iw) {
    const double ww = trapezoid_weight(a.omega(), iw);
    for (std::size_t it = 0; it < a.t().size(); ++it)
      acc += ww * trapezoid_weight(a.t(), it) * a.at(iw, it) * std::conj(b.at(iw, it));
  }
  return acc;
}

double stft_energy(const Spectrogram& spec) { return stft_inner(spec, spec).real(); }

std::complex<double> stft_orthogonality(Order n, const FunctionExpr& g1, const FunctionExpr& g2,
                                        const FunctionExpr& h1, const FunctionExpr& h2, const UniformAxis& omega,
                                        const UniformAxis& t, const StftOptions& opts) {
  const Spectrogram a = stft_compute(n, g1, h1, omega, t, opts);
  const Spectrogram b = stft_compute(n, g2, h2, omega, t, opts);
  return stft_inner(a, b);
}

}  // namespace phin
