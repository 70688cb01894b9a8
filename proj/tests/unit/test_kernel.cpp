#include <catch_amalgamated.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "generators.hpp"
#include "phin/error.hpp"
#include "phin/kernel.hpp"
#include "phin/specfun.hpp"

using namespace phin;
using phin::test::Gen;
using phin::test::rel_err;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);

double envelope(int n, double eta) {
  return std::sqrt(n / (2.0 * kPi)) * std::pow(std::max(1.0, std::fabs(eta)), 0.5 * (n - 1));
}

}  // namespace

TEST_CASE("Order validity envelope") {
  CHECK_THROWS_AS(Order(0), RangeError);
  CHECK_THROWS_AS(Order(9), RangeError);
  CHECK(Order(8).value() == 8);
}

TEST_CASE("coeff_c examples") {
  CHECK_THAT(coeff_c(Order(1), 0), WithinRel(kInvSqrt2Pi, 1e-14));
  CHECK_THAT(coeff_c(Order(1), 1), WithinRel(-0.5 * kInvSqrt2Pi, 1e-14));
  CHECK_THAT(coeff_c(Order(2), 0), WithinRel(0.39006225108940677, 1e-13));
  CHECK_THAT(coeff_c(Order(3), 5), WithinRel(-9.9126328767533169907e-12, 1e-12));
  CHECK_THROWS_AS(coeff_c(Order(1), 201), RangeError);
  CHECK_THROWS_AS(coeff_c(Order(1), -1), DomainError);
}

TEST_CASE("coeff_c for n = 1 matches the cosine series") {
  double fact = 1.0;
  for (int l = 0; l <= 20; ++l) {
    if (l > 0) fact *= (2.0 * l - 1.0) * (2.0 * l);
    CAPTURE(l);
    CHECK(rel_err(coeff_c(Order(1), l), (l % 2 == 0 ? 1.0 : -1.0) * kInvSqrt2Pi / fact) <= 1e-12);
  }
}

TEST_CASE("kernel_even examples and goldens") {
  CHECK_THAT(kernel_even(Order(1), 0.0), WithinRel(kInvSqrt2Pi, 1e-15));
  CHECK_THAT(kernel_even(Order(1), kPi), WithinRel(-kInvSqrt2Pi, 1e-13));
  CHECK_THAT(kernel_even(Order(2), 0.0), WithinRel(0.39006225108940677, 1e-13));
  CHECK_THAT(kernel_even(Order(2), 1.0), WithinRel(0.29496211254513334921, 1e-12));
  CHECK_THAT(kernel_even(Order(2), 3.0), WithinRel(0.2085780398590501621, 1e-11));
  CHECK_THAT(kernel_even(Order(3), 2.5), WithinRel(1.5142009257873893035, 1e-11));
  CHECK_THAT(kernel_even(Order(3), 5.0), WithinRel(-0.74019948052449537544, 1e-10));
}

TEST_CASE("kernel_odd examples and goldens") {
  CHECK_THAT(kernel_odd(Order(1), kPi / 2), WithinRel(-kInvSqrt2Pi, 1e-14));
  for (int n = 1; n <= 4; ++n) CHECK(kernel_odd(Order(n), 0.0) == 0.0);
  CHECK_THAT(kernel_odd(Order(2), 1.0), WithinRel(-0.41187972504706655171, 1e-10));
  CHECK_THAT(kernel_odd(Order(2), 4.2), WithinRel(-0.21566562579557678149, 1e-9));
  CHECK_THAT(hilbert_c2_closed(1.0), WithinRel(0.41187972504706655171, 1e-10));
}

TEST_CASE("kernel_full examples") {
  const std::complex<double> v = kernel_full(Order(1), 1.0);
  CHECK_THAT(v.real(), WithinAbs(kInvSqrt2Pi * std::cos(1.0), 1e-15));
  CHECK_THAT(v.imag(), WithinAbs(-kInvSqrt2Pi * std::sin(1.0), 1e-15));
  CHECK_THAT(kernel_full(Order(1), 0.0).real(), WithinRel(kInvSqrt2Pi, 1e-15));
  CHECK(kernel_full(Order(1), 0.0).imag() == 0.0);
  const std::complex<double> w = kernel_full(Order(2), 1.0);
  CHECK(w.real() == kernel_even(Order(2), 1.0));
  CHECK(w.imag() == kernel_odd(Order(2), 1.0));
  const KernelValue kv = kernel_value(Order(2), 1.0);
  CHECK(kv.full() == w);
  CHECK(kv.eta == 1.0);
}

TEST_CASE("kernel_asymptotic examples") {
  CHECK_THAT(kernel_asymptotic(Order(1), 2.0), WithinAbs(kInvSqrt2Pi * std::cos(2.0), 1e-15));
  CHECK(std::fabs(kernel_asymptotic(Order(3), 5.0) - kernel_even(Order(3), 5.0)) / envelope(3, 5.0) <= 0.02);
  CHECK_THROWS_AS(kernel_asymptotic(Order(2), 0.5), DomainError);
}

TEST_CASE("asymptotic error of c_2 shrinks with eta") {
  double prev = 1.0;
  for (double eta : {10.0, 20.0, 40.0}) {
    const double period = 2.0 * kPi / eta;
    double err = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double x = eta + period * (i / 200.0 - 0.5);
      err = std::max(err, std::fabs(kernel_even(Order(2), x) - kernel_asymptotic(Order(2), x)) / envelope(2, x));
    }
    CAPTURE(eta);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("series and Bessel routes of c_n agree on the overlap window") {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i <= 70; ++i) {
      const double eta = 0.5 + 0.05 * i;
      CAPTURE(n, eta);
      const double a = kernel_even_series(Order(n), eta);
      const double b = kernel_even_bessel(Order(n), eta);
      CHECK(std::fabs(a - b) <= 1e-10 * std::max(std::fabs(b), envelope(n, eta)));
    }
  }
  CHECK_THROWS_AS(kernel_even_series(Order(3), 10.0), RangeError);
}

TEST_CASE("kernel parity holds exactly") {
  Gen gen(0x6e700001);
  for (int i = 0; i < 300; ++i) {
    const int n = gen.integer(1, 4);
    const double eta = gen.real(0.0, n <= 2 ? 50.0 : 12.0);
    CAPTURE(n, eta);
    CHECK(kernel_even(Order(n), -eta) == kernel_even(Order(n), eta));
    CHECK(kernel_odd(Order(n), -eta) == -kernel_odd(Order(n), eta));
  }
}

TEST_CASE("n = 1 kernel is the Fourier kernel") {
  Gen gen(0x6e700002);
  for (int i = 0; i < 100; ++i) {
    const double eta = gen.real(-20.0, 20.0);
    CAPTURE(eta);
    CHECK(std::abs(kernel_full(Order(1), eta) - std::polar(kInvSqrt2Pi, -eta)) <= 1e-12);
  }
}

TEST_CASE("polynomial growth bound holds on a dense re-scan") {
  for (int n = 1; n <= 4; ++n) {
    const double bound = kernel_bound_constant(Order(n));
    const double reach = std::min(50.0, odd_kernel_trusted_radius(Order(n)));
    double worst_even = 0.0;
    double worst_odd = 0.0;
    for (int i = -20000; i <= 20000; ++i) {
      const double eta = 50.0 * i / 20000.0;
      const double scale = 1.0 + std::pow(std::fabs(eta), n - 0.5);
      worst_even = std::max(worst_even, std::fabs(kernel_even(Order(n), eta)) / scale);
      if (std::fabs(eta) <= reach) worst_odd = std::max(worst_odd, std::fabs(kernel_odd(Order(n), eta)) / scale);
    }
    CAPTURE(n, bound, worst_even, worst_odd);
    CHECK(worst_even <= bound);
    CHECK(worst_odd <= 2.0 * bound);
  }
}

TEST_CASE("tabulated odd kernel follows its large-argument form") {
  // s_n ~ -sqrt(n/2pi) eta^((n-1)/2) sin(eta^n/n + (pi/4)(1-1/n)).
  for (int n = 3; n <= 4; ++n) {
    for (double eta : {8.0, 10.0}) {
      const double amp = envelope(n, eta);
      const double want = -amp * std::sin(std::pow(eta, n) / n + kPi / 4 * (1.0 - 1.0 / n));
      CAPTURE(n, eta);
      CHECK(std::fabs(kernel_odd(Order(n), eta) - want) / amp <= 1e-3);
    }
  }
}

TEST_CASE("tabulated odd kernel reports its range") {
  CHECK(odd_kernel_trusted_radius(Order(2)) == std::numeric_limits<double>::infinity());
  const double r = odd_kernel_trusted_radius(Order(3));
  CHECK(r > 30.0);
  CHECK_THROWS_AS(kernel_odd(Order(3), r * 1.01), RangeError);
  CHECK_NOTHROW(kernel_odd(Order(3), r * 0.99));
}
