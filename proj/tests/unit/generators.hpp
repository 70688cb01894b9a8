#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "phin/haar.hpp"

namespace phin::test {

// Seeded source of random inputs for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::complex<double> complex(double scale = 1.0) { return {real(-scale, scale), real(-scale, scale)}; }

  // Random coefficients at level j with kmax drawn from [0, kmax_hi].
  HaarCoeffs coeffs(int j, long kmax_hi, bool with_even, bool with_odd) {
    const long kmax = integer(0, static_cast<int>(kmax_hi));
    HaarCoeffs::Vec e(static_cast<std::size_t>(kmax + 1));
    HaarCoeffs::Vec o(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (with_even) e[k] = complex();
      if (with_odd) o[k] = complex();
    }
    return HaarCoeffs(j, std::move(e), std::move(o));
  }

 private:
  std::mt19937_64 rng_;
};

// Relative distance with an absolute floor, for values that may cross zero.
inline double rel_err(double got, double want, double floor = 1e-300) {
  return std::abs(got - want) / std::max(std::abs(want), floor);
}

}  // namespace phin::test
