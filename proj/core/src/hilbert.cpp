#include "phin/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "gauss_kronrod.hpp"
#include "phin/error.hpp"

namespace phin {

namespace {
constexpr double kInvPi = std::numbers::inv_pi;
}

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(lo < hi)) throw DomainError("Interval requires lo < hi");
}

double hilbert_indicator(const Interval& iv, double t) {
  if (t == iv.lo || t == iv.hi)
    throw SingularityError("hilbert_indicator: t = " + std::to_string(t) + " is an endpoint");
  const double width = iv.hi - iv.lo;
  if (t > iv.hi) return kInvPi * std::log1p(width / (t - iv.hi));
  if (t < iv.lo) return -kInvPi * std::log1p(width / (iv.lo - t));
  return kInvPi * std::log((t - iv.lo) / (iv.hi - t));
}

double odd_atom_eval(int j, long k, double t) {
  if (k < 0) throw DomainError("odd_atom_eval: k must be non-negative");
  const double scale = std::ldexp(1.0, -j);
  const double b = static_cast<double>(k) * scale;
  const double a = static_cast<double>(k + 1) * scale;
  const double x = std::fabs(t);
  if (x == a || (k > 0 && x == b))
    throw SingularityError("odd_atom_eval: t = " + std::to_string(t) + " is an atom endpoint");
  if (x == 0.0) return 0.0;
  double value;
  if (k == 0) {
    // The two half-supports abut at 0, leaving (1/2pi) ln|(x+a)/(x-a)|.
    value = 0.5 * hilbert_indicator(Interval(-a, a), x);
  } else {
    value = 0.5 * (hilbert_indicator(Interval(b, a), x) + hilbert_indicator(Interval(-a, -b), x));
  }
  return t < 0.0 ? -value : value;
}

SampledGrid discrete_hilbert(const SampledGrid& g) {
  const std::size_t n = g.size();
  if (!detail::is_power_of_two(n) || n < 2)
    throw ShapeError("discrete_hilbert: length " + std::to_string(n) + " is not a power of two");
  SampledGrid out{g.origin, g.spacing, g.values};
  detail::fft_inplace(out.values, false);
  const std::size_t half = n / 2;
  const std::complex<double> minus_i(0.0, -1.0);
  out.values[0] = 0.0;
  out.values[half] = 0.0;
  for (std::size_t k = 1; k < half; ++k) {
    out.values[k] *= minus_i;
    out.values[n - k] *= -minus_i;
  }
  detail::fft_inplace(out.values, true);
  const double inv = 1.0 / static_cast<double>(n);
  for (auto& v : out.values) v *= inv;
  return out;
}

double hilbert_principal_value(const std::function<double(double)>& f, double lo, double hi, double t,
                               double tol) {
  if (!(lo < hi)) throw DomainError("hilbert_principal_value: empty interval");
  detail::GkLimits limits;
  limits.abs_tol = tol;
  limits.rel_tol = tol;
  double total = 0.0;
  auto regular = [&](double a, double b) {
    if (!(b > a)) return;
    const auto r = detail::gk_adaptive([&](double tau) { return std::complex<double>(f(tau) / (t - tau)); },
                                       {a, b}, limits);
    total += r.value.real();
  };
  if (t <= lo || t >= hi) {
    regular(lo, hi);
    return kInvPi * total;
  }
  const double d = std::min(t - lo, hi - t);
  // Pair tau = t - u with tau = t + u so the 1/u singularity cancels.
  const auto sym = detail::gk_adaptive(
      [&](double u) { return std::complex<double>((f(t - u) - f(t + u)) / u); }, {0.0, d}, limits);
  total += sym.value.real();
  regular(lo, t - d);
  regular(t + d, hi);
  return kInvPi * total;
}

}  // namespace phin
