#include "phin/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>
#include <string>

#include "fft.hpp"
#include "gauss_kronrod.hpp"
#include "phin/error.hpp"
#include "phin/hilbert.hpp"

namespace phin {

HaarIndex::HaarIndex(int j_, long k_) : j(j_), k(k_) {
  if (k_ < 0) throw DomainError("HaarIndex: k must be non-negative");
  if (j_ < -30 || j_ > 30) throw RangeError("HaarIndex: level j must be in [-30, 30]");
}

double HaarIndex::inner() const noexcept { return std::ldexp(static_cast<double>(k), -j); }
double HaarIndex::outer() const noexcept { return std::ldexp(static_cast<double>(k + 1), -j); }

HaarCoeffs::HaarCoeffs(int j, Vec even, Vec odd) : j_(j), even_(std::move(even)), odd_(std::move(odd)) {
  if (even_.size() != odd_.size()) throw ShapeError("HaarCoeffs: even and odd arrays differ in length");
  if (even_.empty()) throw ShapeError("HaarCoeffs: needs at least one atom");
  if (j < -30 || j > 30) throw RangeError("HaarCoeffs: level j must be in [-30, 30]");
}

HaarCoeffs HaarCoeffs::zeros(int j, long kmax) {
  if (kmax < 0) throw DomainError("HaarCoeffs::zeros: kmax must be non-negative");
  const auto n = static_cast<std::size_t>(kmax + 1);
  return HaarCoeffs(j, Vec(n), Vec(n));
}

double HaarCoeffs::norm_sq() const noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < even_.size(); ++k) s += std::norm(even_[k]) + std::norm(odd_[k]);
  return 0.5 * std::ldexp(s, -j_);
}

bool HaarCoeffs::even_only() const noexcept {
  for (const auto& v : odd_)
    if (v != 0.0) return false;
  return true;
}

bool HaarCoeffs::odd_only() const noexcept {
  for (const auto& v : even_)
    if (v != 0.0) return false;
  return true;
}

double atom_even_eval(HaarIndex idx, double t) {
  const double x = std::fabs(t);
  return (x >= idx.inner() && x < idx.outer()) ? 0.5 : 0.0;
}

double gram_even(int j, long k, long k2) {
  if (k < 0 || k2 < 0) throw DomainError("gram_even: k must be non-negative");
  return k == k2 ? 0.5 * std::ldexp(1.0, -j) : 0.0;
}

namespace {

constexpr double kGauss4Node[2] = {0.3399810435848562648, 0.8611363115940525752};
constexpr double kGauss4Weight[2] = {0.6521451548625461426, 0.3478548451374538574};

// Mean of g over [a, a + h] by 4-point Gauss-Legendre.
template <class G>
std::complex<double> cell_mean(const G& g, double a, double h) {
  const double c = a + 0.5 * h;
  std::complex<double> s;
  for (int q = 0; q < 2; ++q) {
    const double d = 0.5 * h * kGauss4Node[q];
    s += kGauss4Weight[q] * (g(c - d) + g(c + d));
  }
  return 0.5 * s;
}

double x_log_x(double x) { return x == 0.0 ? 0.0 : x * std::log(std::fabs(x)); }

// Cell means of H applied to the piecewise-constant function with the given
// cell means: linear (zero-padded) convolution with the exact cell-to-cell kernel.
std::vector<std::complex<double>> hilbert_cell_means(const std::vector<std::complex<double>>& v) {
  const std::size_t n = v.size();
  const std::size_t m = 2 * n;
  std::vector<std::complex<double>> ker(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double d = i < n ? static_cast<double>(i) : static_cast<double>(i) - static_cast<double>(m);
    ker[i] = (x_log_x(d + 1.0) - 2.0 * x_log_x(d) + x_log_x(d - 1.0)) / std::numbers::pi;
  }
  std::vector<std::complex<double>> buf(m);
  std::copy(v.begin(), v.end(), buf.begin());
  detail::fft_inplace(ker, false);
  detail::fft_inplace(buf, false);
  for (std::size_t i = 0; i < m; ++i) buf[i] *= ker[i];
  detail::fft_inplace(buf, true);
  const double scale = 1.0 / static_cast<double>(m);
  buf.resize(n);
  for (auto& x : buf) x *= scale;
  return buf;
}

// Moments int_L^inf f-(s) s^(-2p-1) ds for p = 0..count-1, with s = L/u.
std::vector<std::complex<double>> odd_tail_moments(const FunctionExpr& f, double big_l, int count) {
  std::vector<std::complex<double>> out(static_cast<std::size_t>(count));
  detail::GkLimits lim;
  lim.abs_tol = 1e-14;
  lim.rel_tol = 1e-12;
  // Oscillating tails never converge near u = 0; the unresolved part is bounded by its width.
  lim.max_intervals = 2000;
  for (int p = 0; p < count; ++p) {
    const double lp = std::pow(big_l, -2.0 * p);
    auto g = [&](double u) -> std::complex<double> {
      if (u <= 0.0) return {};
      const double s = big_l / u;
      const std::complex<double> odd = 0.5 * (f(s) - f(-s));
      return odd * std::pow(u, 2.0 * p - 1.0) * lp;
    };
    out[static_cast<std::size_t>(p)] = detail::gk_adaptive(g, {0.0, 0.5, 1.0}, lim).value;
  }
  return out;
}

}  // namespace

HaarCoeffs project(const FunctionExpr& f, int j, long kmax, const ProjectionGrid& grid) {
  if (kmax < 0) throw DomainError("project: kmax must be non-negative");
  if (!detail::is_power_of_two(grid.size) || grid.size < 16)
    throw ShapeError("project: grid size must be a power of two >= 16");
  if (!(grid.span_factor >= 1.0)) throw DomainError("project: span factor must be >= 1");
  const double cell = std::ldexp(1.0, -j);
  const auto cells = static_cast<double>(kmax + 1);
  const auto n = static_cast<double>(grid.size);
  // Samples per cell: the largest power of two leaving L >= span_factor * atom range.
  const double max_per_cell = n / (2.0 * grid.span_factor * cells);
  if (max_per_cell < 1.0)
    throw RangeError("project: grid of " + std::to_string(grid.size) + " points cannot cover " +
                     std::to_string(kmax + 1) + " atoms");
  const std::size_t per_cell = std::size_t{1} << static_cast<int>(std::floor(std::log2(max_per_cell)));
  const double h = cell / static_cast<double>(per_cell);
  const double half_width = 0.5 * n * h;
  const std::size_t mid = grid.size / 2;  // first cell right of 0
  const std::size_t used = static_cast<std::size_t>(kmax + 1) * per_cell;

  const Parity parity = f.parity();
  std::vector<std::complex<double>> even_part(grid.size);
  std::vector<std::complex<double>> odd_part(grid.size);
  auto mirror = [&](double t) {
    const std::complex<double> fp = f(t);
    const std::complex<double> fm = parity == Parity::none ? f(-t) : (parity == Parity::even ? fp : -fp);
    return std::pair{0.5 * (fp + fm), 0.5 * (fp - fm)};
  };
  for (std::size_t i = 0; i < mid; ++i) {
    const double a = static_cast<double>(i) * h;
    if (parity == Parity::odd) {
      odd_part[mid + i] = cell_mean([&](double t) { return f(t); }, a, h);
    } else if (parity == Parity::even) {
      if (i < used) even_part[mid + i] = cell_mean([&](double t) { return f(t); }, a, h);
    } else {
      const double c = a + 0.5 * h;
      std::complex<double> e;
      std::complex<double> o;
      for (int q = 0; q < 2; ++q) {
        const double d = 0.5 * h * kGauss4Node[q];
        const auto [e1, o1] = mirror(c - d);
        const auto [e2, o2] = mirror(c + d);
        e += kGauss4Weight[q] * (e1 + e2);
        o += kGauss4Weight[q] * (o1 + o2);
      }
      even_part[mid + i] = 0.5 * e;
      odd_part[mid + i] = 0.5 * o;
    }
    odd_part[mid - 1 - i] = -odd_part[mid + i];
  }

  HaarCoeffs::Vec even(static_cast<std::size_t>(kmax + 1));
  HaarCoeffs::Vec odd(even.size());
  const double inv = 2.0 / static_cast<double>(per_cell);
  for (std::size_t k = 0; k < even.size(); ++k) {
    std::complex<double> s;
    for (std::size_t p = 0; p < per_cell; ++p) s += even_part[mid + k * per_cell + p];
    even[k] = inv * s;
  }
  if (parity != Parity::even) {
    std::vector<std::complex<double>> hf = hilbert_cell_means(odd_part);
    if (f.decay_radius(1e-15) > half_width) {
      // Missing contribution of |s| > L: -(2/pi) sum_p t^(2p) M_p, averaged per cell.
      const double ratio = static_cast<double>(used) * h / half_width;
      const int terms = std::clamp(static_cast<int>(std::ceil(-36.0 / std::log(ratio * ratio))) + 1, 1, 80);
      const auto mom = odd_tail_moments(f, half_width, terms);
      for (std::size_t i = 0; i < used; ++i) {
        const double a = static_cast<double>(i) * h;
        const double b = a + h;
        std::complex<double> s;
        double pa = a;
        double pb = b;
        for (int p = 0; p < terms; ++p) {
          s += mom[static_cast<std::size_t>(p)] * ((pb - pa) / ((2.0 * p + 1.0) * h));
          pa *= a * a;
          pb *= b * b;
        }
        hf[mid + i] -= (2.0 / std::numbers::pi) * s;
      }
    }
    for (std::size_t k = 0; k < odd.size(); ++k) {
      std::complex<double> s;
      for (std::size_t p = 0; p < per_cell; ++p) s += hf[mid + k * per_cell + p];
      odd[k] = -inv * s;
    }
  }
  return HaarCoeffs(j, std::move(even), std::move(odd));
}

std::complex<double> reconstruct_eval(const HaarCoeffs& c, double t) {
  const int j = c.j();
  const double x = std::fabs(t);
  std::complex<double> acc;
  const double pos = std::ldexp(x, j);
  if (pos < static_cast<double>(c.size())) {
    const auto k = static_cast<std::size_t>(std::floor(pos));
    acc += 0.5 * c.even()[k];
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto& w = c.odd()[k];
    if (w != 0.0) acc += w * odd_atom_eval(j, static_cast<long>(k), t);
  }
  return acc;
}

}  // namespace phin
