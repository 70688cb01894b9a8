#include "phin/kernel.hpp"

#include <quadmath.h>

#include <array>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "fft.hpp"
#include "phin/error.hpp"
#include "phin/hilbert.hpp"
#include "phin/specfun.hpp"

namespace phin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kDefaultOddGrid = std::size_t{1} << 20;

// |eta|^n / n at which kernel_even leaves the power series.
constexpr double kSeriesSwitch = 2.0;

double mu_of(int n) { return 1.0 / (2.0 * n); }

double series_double(int n, double x) {
  const double c0 = coeff_c(Order(n), 0);
  const double mu = mu_of(n);
  const double z = std::pow(x, n) / n;
  const double q = 0.25 * z * z;
  double term = c0;
  double sum = c0;
  for (int l = 0; l < 200; ++l) {
    term *= -q / ((l + mu) * (l + 1.0));
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  return sum;
}

// Odd kernel table for n >= 3: s_n sampled at t_i = i h, i >= 0.
struct OddTable {
  double h = 0.0;
  double half_width = 0.0;
  double trusted = 0.0;
  std::vector<double> s;
};

std::array<std::once_flag, 9> g_table_once;
std::array<std::unique_ptr<OddTable>, 9> g_tables;

double taper(double x, double lo, double hi) {
  if (x <= lo) return 1.0;
  if (x >= hi) return 0.0;
  return 0.5 * (1.0 + std::cos(kPi * (x - lo) / (hi - lo)));
}

std::unique_ptr<OddTable> build_table(int n) {
  const std::size_t size = odd_kernel_grid_size();
  // Keep >= 4 samples per period of the local frequency |t|^(n-1) up to the taper end.
  const double half_width =
      std::pow(kPi * static_cast<double>(size) / (8.0 * std::pow(0.9, n - 1)), 1.0 / n);
  const double h = 2.0 * half_width / static_cast<double>(size);
  SampledGrid grid{-half_width, h, std::vector<std::complex<double>>(size)};
  const std::size_t mid = size / 2;  // index of t = 0
  for (std::size_t i = 0; i < mid; ++i) {
    const double t = static_cast<double>(i) * h;
    const double w = taper(t, 0.6 * half_width, 0.9 * half_width);
    const double c = w > 0.0 ? kernel_even(Order(n), t) * w : 0.0;
    grid.values[mid + i] = c;
    if (i > 0) grid.values[mid - i] = c;
  }
  grid.values[0] = grid.values[1];
  const SampledGrid hc = discrete_hilbert(grid);
  auto table = std::make_unique<OddTable>();
  table->h = h;
  table->half_width = half_width;
  table->trusted = 0.5 * half_width;
  const auto keep = static_cast<std::size_t>(table->trusted / h) + 16;
  table->s.resize(keep);
  for (std::size_t i = 0; i < keep; ++i) table->s[i] = -hc.values[mid + i].real();
  table->s[0] = 0.0;
  return table;
}

const OddTable& odd_table(int n) {
  std::call_once(g_table_once[n], [n] { g_tables[n] = build_table(n); });
  return *g_tables[n];
}

// Eight-point Lagrange interpolation in barycentric form, odd extension at 0.
double interpolate_odd(const OddTable& tab, double x) {
  constexpr std::array<double, 8> w = {1, -7, 21, -35, 35, -21, 7, -1};
  const double u = x / tab.h;
  const long base = static_cast<long>(std::floor(u)) - 3;
  auto sample = [&](long i) { return i < 0 ? -tab.s[static_cast<std::size_t>(-i)] : tab.s[static_cast<std::size_t>(i)]; };
  double num = 0.0;
  double den = 0.0;
  for (int k = 0; k < 8; ++k) {
    const double d = u - static_cast<double>(base + k);
    if (d == 0.0) return sample(base + k);
    const double c = w[k] / d;
    num += c * sample(base + k);
    den += c;
  }
  return num / den;
}

}  // namespace

Order::Order(int n) : n_(n) {
  if (n < 1 || n > 8) throw RangeError("Order: n must be in [1, 8], got " + std::to_string(n));
}

double coeff_c(Order order, int l) {
  const int n = order.value();
  if (l < 0) throw DomainError("coeff_c: l must be non-negative");
  if (l > 200) throw RangeError("coeff_c: l must not exceed 200");
  const double mu = mu_of(n);
  const double sign = (l % 2 == 0) ? 1.0 : -1.0;
  const double two_n = 2.0 * n;
  if (l <= 20) {
    double fact = 1.0;
    for (int i = 2; i <= l; ++i) fact *= i;
    return sign * n / (std::pow(two_n, 2.0 * l + mu) * gamma(l + mu) * fact);
  }
  const double log_abs =
      std::log(static_cast<double>(n)) - (2.0 * l + mu) * std::log(two_n) - log_gamma(l + mu) - log_gamma(l + 1.0);
  return sign * std::exp(log_abs);
}

double kernel_even(Order order, double eta) {
  const int n = order.value();
  if (!std::isfinite(eta)) throw DomainError("kernel_even: non-finite argument");
  const double x = std::fabs(eta);
  if (std::pow(x, n) / n < kSeriesSwitch) return series_double(n, x);
  return kernel_even_bessel(order, x);
}

double kernel_even_series(Order order, double eta) {
  const int n = order.value();
  const double x = std::fabs(eta);
  const double z = std::pow(x, n) / n;
  if (z > 40.0) throw RangeError("kernel_even_series: |eta|^n/n exceeds 40");
  const __float128 mu = __float128(1) / (2 * n);
  const __float128 zq = powq(__float128(x), n) / n;
  const __float128 q = zq * zq / 4;
  __float128 term = coeff_c(order, 0);
  __float128 sum = term;
  for (int l = 0; l < 400; ++l) {
    term *= -q / ((l + mu) * (l + 1));
    sum += term;
    if (fabsq(term) < __float128(1e-30) * fabsq(sum) && l > 4) break;
  }
  return static_cast<double>(sum);
}

double kernel_even_bessel(Order order, double eta) {
  const int n = order.value();
  const double x = std::fabs(eta);
  if (x == 0.0) return coeff_c(order, 0);
  const double z = std::pow(x, n) / n;
  return 0.5 * std::pow(x, n - 0.5) * bessel_j(BesselOrder(-1.0 + mu_of(n)), z);
}

double hilbert_c2_closed(double eta) {
  if (!std::isfinite(eta)) throw DomainError("hilbert_c2_closed: non-finite argument");
  const double x = std::fabs(eta);
  if (x == 0.0) return 0.0;
  const double g54 = gamma(1.25);
  const double arg = 0.5 * x * x;
  const double root = std::sqrt(2.0 * kPi * x) * g54;
  const BesselOrder nu(0.75);
  double bracket;
  if (arg < 25.0) {
    bracket = 2.0 + root * (bessel_j(nu, arg) - struve_h(nu, arg));
  } else {
    // J - H = (J - Y) - (H - Y); the leading term of H - Y cancels the 2 exactly.
    bracket = root * (bessel_j(nu, arg) - bessel_y_asymptotic(nu, arg) - struve_minus_y_asymptotic(nu, arg, 1));
  }
  const double value = x / (4.0 * std::sqrt(kPi) * g54) * bracket;
  return eta < 0.0 ? -value : value;
}

double kernel_odd(Order order, double eta) {
  const int n = order.value();
  if (!std::isfinite(eta)) throw DomainError("kernel_odd: non-finite argument");
  if (eta == 0.0) return 0.0;
  if (n == 1) return -std::sin(eta) / std::sqrt(2.0 * kPi);
  if (n == 2) return -hilbert_c2_closed(eta);
  const OddTable& tab = odd_table(n);
  const double x = std::fabs(eta);
  if (x > tab.trusted)
    throw RangeError("kernel_odd: |eta| = " + std::to_string(x) + " outside the s_" + std::to_string(n) +
                     " grid [-" + std::to_string(tab.trusted) + ", " + std::to_string(tab.trusted) + "]");
  const double v = interpolate_odd(tab, x);
  return eta < 0.0 ? -v : v;
}

std::complex<double> kernel_full(Order n, double eta) { return {kernel_even(n, eta), kernel_odd(n, eta)}; }

KernelValue kernel_value(Order n, double eta) { return {kernel_even(n, eta), kernel_odd(n, eta), eta}; }

double kernel_asymptotic(Order order, double eta) {
  const int n = order.value();
  const double x = std::fabs(eta);
  if (!(x >= 1.0)) throw DomainError("kernel_asymptotic: requires |eta| >= 1");
  return std::sqrt(n / (2.0 * kPi)) * std::pow(x, 0.5 * (n - 1)) *
         std::cos(std::pow(x, n) / n + 0.25 * kPi * (1.0 - 1.0 / n));
}

double kernel_bound_constant(Order order) {
  // max over |eta| <= 50 of max(|c_n|, |s_n|) / (1 + |eta|^(n-1/2)), rounded up;
  // s_n is scanned over its trusted range only for n >= 3.
  static constexpr std::array<double, 9> kBound = {0.0, 0.40, 0.40, 0.41, 0.42, 0.42, 0.43, 0.43, 0.44};
  return kBound[order.value()];
}

double odd_kernel_trusted_radius(Order order) {
  if (order.value() <= 2) return std::numeric_limits<double>::infinity();
  return odd_table(order.value()).trusted;
}

std::size_t odd_kernel_grid_size() {
  const char* env = std::getenv("PHIN_HILBERT_GRID");
  if (env == nullptr || *env == '\0') return kDefaultOddGrid;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || !detail::is_power_of_two(v) || v < 4096 || v > (1ull << 26))
    throw ShapeError(std::string("PHIN_HILBERT_GRID must be a power of two in [4096, 2^26], got ") + env);
  return static_cast<std::size_t>(v);
}

}  // namespace phin
