#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace phin {

/// Uniform samples f(origin + i*spacing), i = 0..size-1.
struct SampledGrid {
  double origin = 0.0;
  double spacing = 1.0;
  std::vector<std::complex<double>> values;

  std::size_t size() const noexcept { return values.size(); }
  double at(std::size_t i) const noexcept { return origin + static_cast<double>(i) * spacing; }
  double last() const noexcept { return at(values.empty() ? 0 : values.size() - 1); }

  /// Piecewise-linear interpolation; zero outside [origin, last()].
  std::complex<double> interpolate(double t) const;
};

/// Evenly spaced real axis, endpoints included.
struct UniformAxis {
  double lo = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  static UniformAxis from_range(double lo, double hi, double step);
  double operator[](std::size_t i) const noexcept { return lo + static_cast<double>(i) * step; }
  std::size_t size() const noexcept { return count; }
  double hi() const noexcept { return (*this)[count == 0 ? 0 : count - 1]; }
};

/// Index range [begin, end) excluding the outer 10% at each edge.
struct TrustedRange {
  std::size_t begin;
  std::size_t end;
};
TrustedRange trusted_interior(std::size_t size);

}  // namespace phin
