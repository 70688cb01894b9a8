#pragma once

#include <complex>
#include <string>
#include <vector>

#include "phin/function_expr.hpp"
#include "phin/grid.hpp"
#include "phin/haar.hpp"
#include "phin/kernel.hpp"
#include "phin/quadrature.hpp"
#include "phin/subspace.hpp"

namespace phin {

/// Short-time transform V(omega, t) = Phi_n(g(. - t) h)(omega) on a product grid.
class Spectrogram {
 public:
  Spectrogram(Order n, UniformAxis omega, UniformAxis t, std::vector<std::complex<double>> values,
              double window_norm_sq);

  Order order() const noexcept { return n_; }
  const UniformAxis& omega() const noexcept { return omega_; }
  const UniformAxis& t() const noexcept { return t_; }
  double window_norm_sq() const noexcept { return window_norm_sq_; }
  /// Row-major, omega index outermost.
  const std::vector<std::complex<double>>& values() const noexcept { return values_; }
  std::complex<double> at(std::size_t i_omega, std::size_t i_t) const { return values_[i_omega * t_.size() + i_t]; }

 private:
  Order n_;
  UniformAxis omega_;
  UniformAxis t_;
  std::vector<std::complex<double>> values_;
  double window_norm_sq_;
};

enum class StftMode { engine, quadrature };

struct StftOptions {
  /// Projection level for products and omega slices.
  int level = 6;
  StftMode mode = StftMode::engine;
  QuadOpts quad{1e-9, 1e-9, 40, 0.0, true};
  ProjectionGrid projection{};
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

/// omega in [-8, 8] and t in [-6, 6], both with step 1/16.
UniformAxis default_stft_omega_axis();
UniformAxis default_stft_t_axis();

Spectrogram stft_compute(Order n, const FunctionExpr& g, const FunctionExpr& h, const UniformAxis& omega,
                         const UniformAxis& t, const StftOptions& opts = {});

/// Inverts a spectrogram. Each omega slice is projected once at construction;
/// evaluation applies Phi_n to the slices at -t and integrates over tau with
/// the trapezoid rule, weighted by conj(g(t - tau)) / <g, g>.
class StftReconstructor {
 public:
  StftReconstructor(const Spectrogram& spec, FunctionExpr g, int level = 6, ProjectionGrid grid = {});
  std::complex<double> operator()(double t) const;
  std::vector<std::complex<double>> operator()(const std::vector<double>& ts) const;

 private:
  Order n_;
  UniformAxis tau_;
  double window_norm_sq_;
  FunctionExpr g_;
  int level_;
  std::vector<HaarCoeffs> slices_;
};

std::complex<double> stft_reconstruct(const Spectrogram& spec, const FunctionExpr& g, double t, int level = 6);

/// Trapezoid integral of |V|^2 over the grid.
double stft_energy(const Spectrogram& spec);

/// Trapezoid integral of V1 conj(V2); grids must agree.
std::complex<double> stft_inner(const Spectrogram& a, const Spectrogram& b);

/// int int V_{g1} h1 conj(V_{g2} h2) d omega dt on the given grids.
std::complex<double> stft_orthogonality(Order n, const FunctionExpr& g1, const FunctionExpr& g2,
                                        const FunctionExpr& h1, const FunctionExpr& h2, const UniformAxis& omega,
                                        const UniformAxis& t, const StftOptions& opts = {});

/// Long-form CSV "omega,t,re,im".
std::string to_csv(const Spectrogram& spec);
/// {"n", "window_norm_sq", "omega": {lo, step, count}, "t": {...}, "values": [[re, im], ...]}.
std::string to_json(const Spectrogram& spec);
Spectrogram spectrogram_from_json(const std::string& text);

}  // namespace phin
