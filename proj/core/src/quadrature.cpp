#include "phin/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gauss_kronrod.hpp"
#include "phin/error.hpp"

namespace phin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxGrowth = 24;
constexpr std::size_t kMaxPhaseZeros = 4'000'000;
// Accuracy floor when the tabulated odd kernel (n >= 3) enters the integrand.
constexpr double kOddTableTolerance = 1e-4;

void validate(const QuadOpts& o) {
  if (!(o.abs_tol > 0.0) || !(o.rel_tol > 0.0)) throw DomainError("QuadOpts: tolerances must be positive");
  if (o.max_depth < 1 || o.max_depth > 60) throw DomainError("QuadOpts: max_depth must be in [1, 60]");
  if (o.truncation_radius < 0.0) throw DomainError("QuadOpts: truncation_radius must be non-negative");
}

detail::GkLimits limits_of(const QuadOpts& o, double abs_tol) {
  detail::GkLimits l;
  l.abs_tol = abs_tol;
  l.rel_tol = o.rel_tol;
  l.max_depth = o.max_depth;
  return l;
}

// Smooth step: 1 for s <= 1, 0 for s >= 2, C-infinity in between.
double cutoff(double s) {
  if (s <= 1.0) return 1.0;
  if (s >= 2.0) return 0.0;
  const double x = s - 1.0;
  const double a = std::exp(-1.0 / (1.0 - x));
  const double b = std::exp(-1.0 / x);
  return a / (a + b);
}

// Partition of [lo, hi] from breakpoints and kernel phase zeros.
std::vector<double> partition(double lo, double hi, const std::vector<double>& breaks, int n, double omega,
                              bool split) {
  std::vector<double> pts = {lo, hi};
  for (double p : breaks)
    if (p > lo && p < hi) pts.push_back(p);
  const double w = std::fabs(omega);
  if (split && w > 0.0) {
    // t_m = (n pi m)^(1/n) / |omega|
    const double m_lo = std::pow(w * lo, n) / (n * kPi);
    const double m_hi = std::pow(w * hi, n) / (n * kPi);
    if (m_hi - m_lo > static_cast<double>(kMaxPhaseZeros))
      throw RangeError("phi_integral: too many kernel oscillations on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    for (auto m = static_cast<long>(std::floor(m_lo)) + 1; m <= static_cast<long>(std::floor(m_hi)); ++m) {
      const double t = std::pow(n * kPi * static_cast<double>(m), 1.0 / n) / w;
      if (t > lo && t < hi) pts.push_back(t);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<double> mirrored_breaks(const FunctionExpr& f, double hi) {
  std::vector<double> out;
  for (double p : f.breakpoints(-hi, hi)) out.push_back(std::fabs(p));
  return out;
}

struct HalfLine {
  Order n;
  const FunctionExpr& f;
  double omega;
  Parity parity;

  // 2 (c_n(omega t) f+(t) + i s_n(omega t) f-(t)) for t > 0.
  std::complex<double> operator()(double t) const {
    const std::complex<double> fp = f(t);
    std::complex<double> even;
    std::complex<double> odd;
    switch (parity) {
      case Parity::even: even = fp; break;
      case Parity::odd: odd = fp; break;
      case Parity::none: {
        const std::complex<double> fm = f(-t);
        even = 0.5 * (fp + fm);
        odd = 0.5 * (fp - fm);
        break;
      }
    }
    const double eta = omega * t;
    std::complex<double> acc;
    if (even != 0.0) acc += kernel_even(n, eta) * even;
    if (odd != 0.0 && eta != 0.0) acc += std::complex<double>(0.0, kernel_odd(n, eta)) * odd;
    return 2.0 * acc;
  }
};

// Bound on the neglected tail beyond R for rapidly decaying f.
double tail_bound(const HalfLine& h, double radius) {
  const int n = h.n.value();
  const double c = kernel_bound_constant(h.n);
  auto bound = [&](double t) {
    const double grow = 1.0 + std::pow(std::fabs(h.omega) * t, n - 0.5);
    double mag = std::abs(h.f(t));
    if (h.parity == Parity::none) mag += std::abs(h.f(-t));
    else mag *= 2.0;
    return std::complex<double>(c * grow * mag);
  };
  detail::GkLimits l;
  l.abs_tol = 1e-300;
  l.rel_tol = 1e-3;
  l.max_intervals = 2000;
  const auto r = detail::gk_adaptive(bound, {radius, 1.5 * radius, 2.0 * radius, 4.0 * radius}, l);
  return r.value.real();
}

}  // namespace

double default_truncation_radius(Order n) { return n.value() == 1 ? 30.0 : 8.0; }

QuadResult integrate(const std::function<std::complex<double>(double)>& fn, double lo, double hi,
                     std::vector<double> breakpoints, const QuadOpts& opts) {
  validate(opts);
  if (!(hi > lo)) return {};
  std::vector<double> pts = {lo, hi};
  for (double p : breakpoints)
    if (p > lo && p < hi) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const auto r = detail::gk_adaptive(fn, pts, limits_of(opts, opts.abs_tol));
  if (!r.converged) throw AccuracyError("integrate: tolerance not met", r.value, r.error);
  return {r.value, r.error, std::max(std::fabs(lo), std::fabs(hi)), r.evaluations};
}

QuadResult phi_integral(Order n, const FunctionExpr& f, double omega, const QuadOpts& opts) {
  validate(opts);
  if (!std::isfinite(omega)) throw DomainError("phi_integral: non-finite omega");
  const int order = n.value();
  const HalfLine integrand{n, f, omega, f.parity()};
  const double w = std::fabs(omega);
  const bool needs_odd = f.parity() != Parity::even && w > 0.0;
  const double odd_limit = needs_odd ? odd_kernel_trusted_radius(n) / w : std::numeric_limits<double>::infinity();

  QuadResult out;
  auto run = [&](double lo, double hi, double tol, auto&& fn) {
    const auto pts = partition(lo, hi, mirrored_breaks(f, hi), order, omega, opts.oscillation_split);
    const auto r = detail::gk_adaptive(fn, pts, limits_of(opts, tol));
    out.evaluations += r.evaluations;
    if (!r.converged) throw AccuracyError("phi_integral: tolerance not met on [" + std::to_string(lo) + ", " +
                                              std::to_string(hi) + "]",
                                          r.value, r.error);
    return r;
  };

  if (f.tail() != TailClass::algebraic) {
    double radius = opts.truncation_radius > 0.0 ? opts.truncation_radius : default_truncation_radius(n);
    double tail = 0.0;
    if (f.tail() == TailClass::compact) {
      radius = f.decay_radius(opts.abs_tol);
    } else {
      int growth = 0;
      while ((tail = tail_bound(integrand, radius)) > 0.25 * opts.abs_tol) {
        if (++growth > kMaxGrowth)
          throw DomainError("phi_integral: tail test failed; f does not decay fast enough against the kernel");
        radius *= 1.25;
      }
    }
    if (radius > odd_limit)
      throw RangeError("phi_integral: |omega| R = " + std::to_string(w * radius) +
                       " exceeds the tabulated odd kernel range " + std::to_string(w * odd_limit));
    const auto r = run(0.0, radius, 0.75 * opts.abs_tol, integrand);
    out.value = r.value;
    out.error = r.error + tail;
    out.radius = radius;
    return out;
  }

  // Slow 1/|t| decay: smooth cutoff at two radii; their difference is the error indicator.
  double radius = opts.truncation_radius > 0.0 ? opts.truncation_radius : 10.0 * default_truncation_radius(n);
  if (w > 0.0) radius = std::max(radius, std::pow(200.0 * kPi * order, 1.0 / order) / w);
  const double radius_cap = std::min(odd_limit / 3.0, 1e6);
  radius = std::min(radius, radius_cap);
  const double tol = opts.abs_tol / 4.0;
  for (int attempt = 0;; ++attempt) {
    const auto head = run(0.0, radius, tol, integrand);
    auto windowed = [&](double r0) {
      auto fn = [&, r0](double t) { return cutoff(t / r0) * integrand(t); };
      std::complex<double> acc;
      if (r0 > radius) acc += run(radius, r0, tol, integrand).value;
      acc += run(r0, 2.0 * r0, tol, fn).value;
      return acc;
    };
    const std::complex<double> near = head.value + windowed(radius);
    const std::complex<double> far = head.value + windowed(1.5 * radius);
    const double indicator = std::abs(far - near);
    out.value = far;
    out.error = indicator + head.error;
    out.radius = 3.0 * radius;
    double target = std::max(opts.abs_tol, opts.rel_tol * std::abs(far));
    if (needs_odd && order >= 3) target = std::max(target, kOddTableTolerance);
    if (indicator <= target) return out;
    if (attempt >= 5 || 2.0 * radius > radius_cap)
      throw AccuracyError("phi_integral: cutoff radius did not settle", far, indicator);
    radius *= 2.0;
  }
}

QuadResult inner_product(const FunctionExpr& f, const FunctionExpr& g, const QuadOpts& opts) {
  validate(opts);
  const FunctionExpr prod = FunctionExpr::product(f, g);
  if (prod.parity() == Parity::odd) return {};
  auto integrand = [&](double t) { return f(t) * std::conj(g(t)); };
  const bool slow = f.tail() == TailClass::algebraic && g.tail() == TailClass::algebraic;
  double radius;
  if (!slow) {
    radius = std::min(f.tail() == TailClass::algebraic ? std::numeric_limits<double>::infinity()
                                                       : f.decay_radius(opts.abs_tol * 1e-2),
                      g.tail() == TailClass::algebraic ? std::numeric_limits<double>::infinity()
                                                       : g.decay_radius(opts.abs_tol * 1e-2));
    if (opts.truncation_radius > 0.0) radius = std::max(radius, opts.truncation_radius);
  } else {
    radius = opts.truncation_radius > 0.0 ? opts.truncation_radius : 1e4;
  }
  std::vector<double> pts = f.breakpoints(-radius, radius);
  for (double p : g.breakpoints(-radius, radius)) pts.push_back(p);
  for (double p = 1.0; p < radius; p *= 2.0) {
    pts.push_back(p);
    pts.push_back(-p);
  }
  QuadResult r = integrate(integrand, -radius, radius, pts, opts);
  r.radius = radius;
  if (slow) {
    // Product decays like A/t^2: the tail beyond R is about R (h(R) + h(-R)).
    const std::complex<double> tail = radius * (integrand(radius) + integrand(-radius));
    r.value += tail;
    r.error += std::abs(tail) * 0.1;
  }
  return r;
}

}  // namespace phin
