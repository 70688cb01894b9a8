#include "phin/grid.hpp"

#include <cmath>
#include <string>

#include "phin/error.hpp"

namespace phin {

std::complex<double> SampledGrid::interpolate(double t) const {
  if (values.empty()) return {};
  const double u = (t - origin) / spacing;
  if (u < 0.0 || u > static_cast<double>(values.size() - 1)) return {};
  const auto i = static_cast<std::size_t>(std::floor(u));
  if (i + 1 >= values.size()) return values.back();
  const double w = u - static_cast<double>(i);
  return (1.0 - w) * values[i] + w * values[i + 1];
}

UniformAxis UniformAxis::from_range(double lo, double hi, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("axis step must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
    throw DomainError("axis range must be finite and non-empty");
  // Tolerate rounding so that e.g. [-pi, pi] step pi/2 has five points.
  const double span = (hi - lo) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  if (count > 100'000'000) throw RangeError("axis has too many points: " + std::to_string(count));
  return UniformAxis{lo, step, count};
}

TrustedRange trusted_interior(std::size_t size) {
  const std::size_t edge = size / 10;
  return {edge, size - edge};
}

}  // namespace phin
