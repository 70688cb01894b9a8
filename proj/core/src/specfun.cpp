#include "phin/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "phin/error.hpp"

namespace phin {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos approximation, g = 7, nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

// Below this argument J_nu uses the ascending series.
constexpr double kBesselSeriesLimit = 20.0;
// Hankel's expansion is tried from here on.
constexpr double kHankelMin = 8.0;
// Below this argument H_nu uses the ascending series.
constexpr double kStruveSeriesLimit = 25.0;

bool is_integer(double v) { return std::isfinite(v) && v == std::nearbyint(v); }

bool is_pole(double x) { return x <= 0.0 && is_integer(x); }

// sin(pi x) with exact zeros at the integers.
double sin_pi(double x) {
  if (is_integer(x)) return 0.0;
  double r = std::remainder(x, 2.0);  // r in [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double lanczos_sum(double z) {
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  return a;
}

void check_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite argument");
}

// Ascending series for J_nu, nu not a negative integer.
double bessel_series(double nu, double x) {
  using ld = long double;
  const ld half = static_cast<ld>(x) / 2;
  const ld q = half * half;
  ld term;
  if (nu + 1.0 < 170.0) {
    term = std::pow(half, static_cast<ld>(nu)) / static_cast<ld>(gamma(nu + 1.0));
  } else {
    term = gamma_sign(nu + 1.0) *
           std::exp(static_cast<ld>(nu) * std::log(half) - static_cast<ld>(log_gamma(nu + 1.0)));
  }
  ld sum = term;
  for (int k = 0; k < 1000; ++k) {
    term *= -q / (static_cast<ld>(k + 1) * (static_cast<ld>(k + 1) + static_cast<ld>(nu)));
    sum += term;
    if (std::fabs(term) <= 1e-21L * std::fabs(sum) && k > 2) break;
    if (term == 0) break;
  }
  return static_cast<double>(sum);
}

struct HankelPQ {
  double p = 1.0;
  double q = 0.0;
  bool converged = false;
};

// P and Q of Hankel's expansion. Converged means the smallest term fell
// below double precision and no term exceeded O(1).
HankelPQ hankel_pq(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  HankelPQ out;
  double term = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  double largest = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (k * 8.0 * x);
    if (next == 0.0) {
      out.converged = largest <= 1e3;
      return out;
    }
    if (std::fabs(next) > prev && std::fabs(next) < 1e300) {
      // Past the smallest term: stop before adding a growing one.
      break;
    }
    term = next;
    prev = std::fabs(term);
    largest = std::max(largest, prev);
    const int r = k % 4;
    if (k % 2 == 1) out.q += (r == 1) ? term : -term;
    else out.p += (r == 2) ? -term : term;
    if (prev < 1e-17) {
      out.converged = largest <= 1e3;
      return out;
    }
  }
  out.converged = prev < 1e-15 && largest <= 1e3;
  return out;
}

double hankel_phase(double nu, double x) { return x - (0.5 * nu + 0.25) * kPi; }

double bessel_hankel(double nu, double x, const HankelPQ& pq) {
  const double chi = hankel_phase(nu, x);
  return std::sqrt(2.0 / (kPi * x)) * (pq.p * std::cos(chi) - pq.q * std::sin(chi));
}

double bessel_y_hankel(double nu, double x, const HankelPQ& pq) {
  const double chi = hankel_phase(nu, x);
  return std::sqrt(2.0 / (kPi * x)) * (pq.p * std::sin(chi) + pq.q * std::cos(chi));
}

double bessel_low_order(double nu, double x) {
  const HankelPQ pq = hankel_pq(nu, x);
  if (!pq.converged) throw RangeError("bessel_j: Hankel expansion failed for low order");
  return bessel_hankel(nu, x, pq);
}

// J_nu(x) for x >= kBesselSeriesLimit when Hankel's expansion does not converge
// (|nu| too large). Recurrence seeded from the two lowest orders.
double bessel_recurrence(double nu, double x) {
  if (nu >= 0.0) {
    const double nu0 = nu - std::floor(nu);
    const int steps = static_cast<int>(std::floor(nu));
    const double j0 = bessel_low_order(nu0, x);
    if (steps == 0) return j0;
    const double j1 = bessel_low_order(nu0 + 1.0, x);
    if (nu <= x) {
      double prev = j0;
      double cur = j1;
      for (int m = 1; m < steps; ++m) {
        const double order = nu0 + m;
        const double next = (2.0 * order / x) * cur - prev;
        prev = cur;
        cur = next;
      }
      return cur;
    }
    // Miller's backward recurrence, normalised against the two seed orders.
    const int start = steps + 20 + static_cast<int>(std::sqrt(40.0 * nu));
    double above = 0.0;
    double cur = 1e-30;
    double at_nu = 0.0;
    double f0 = 0.0;
    double f1 = 0.0;
    for (int m = start; m >= 1; --m) {
      const double order = nu0 + m;
      const double below = (2.0 * order / x) * cur - above;
      above = cur;
      cur = below;
      if (m == steps) at_nu = above;
      if (m == 1) {
        f1 = above;
        f0 = cur;
      }
      if (std::fabs(cur) > 1e100) {
        cur *= 1e-100;
        above *= 1e-100;
        at_nu *= 1e-100;
      }
    }
    if (steps == 0) at_nu = f0;
    const double scale = (j0 * f0 + j1 * f1) / (f0 * f0 + f1 * f1);
    return at_nu * scale;
  }
  // Negative non-integer order: recur downward from nu0 in (-1, 0).
  const double nu0 = nu - std::floor(nu) - 1.0;
  const int steps = static_cast<int>(std::llround(nu0 - nu));
  double upper = bessel_low_order(nu0 + 1.0, x);
  double cur = bessel_low_order(nu0, x);
  for (int m = 0; m < steps; ++m) {
    const double order = nu0 - m;
    const double next = (2.0 * order / x) * cur - upper;
    upper = cur;
    cur = next;
  }
  return cur;
}

// 1/Gamma(z) with zeros at the poles.
double rgamma(double z) {
  if (is_pole(z)) return 0.0;
  return 1.0 / gamma(z);
}

struct SeriesResult {
  double value;
  double rel_error;
};

SeriesResult struve_series(double nu, double x) {
  using ld = long double;
  const ld half = static_cast<ld>(x) / 2;
  const ld q = half * half;
  ld term = std::pow(half, static_cast<ld>(nu) + 1) /
            (static_cast<ld>(gamma(1.5)) * static_cast<ld>(gamma(nu + 1.5)));
  ld sum = term;
  ld largest = std::fabs(term);
  int k = 0;
  for (; k < 2000; ++k) {
    term *= -q / ((k + 1.5L) * (k + 1.5L + static_cast<ld>(nu)));
    sum += term;
    largest = std::max(largest, std::fabs(term));
    if (std::fabs(term) <= 1e-21L * std::fabs(sum) && k > 2) break;
  }
  if (k >= 2000) return {static_cast<double>(sum), 1.0};
  const ld eps = std::numeric_limits<ld>::epsilon();
  const ld rel = sum == 0 ? 1.0L : 8 * eps * largest / std::fabs(sum);
  return {static_cast<double>(sum), static_cast<double>(rel)};
}

// Asymptotic series of H_nu - Y_nu; returns value and the magnitude of the
// smallest term as an error estimate.
SeriesResult struve_minus_y_series(double nu, double x, int skip) {
  const double t0 = std::pow(x / 2.0, nu - 1.0) * rgamma(nu + 0.5) / std::sqrt(kPi);
  double term = t0;  // Gamma(1/2)/pi = 1/sqrt(pi)
  double sum = skip > 0 ? 0.0 : term;
  double prev = std::fabs(term);
  const double r = 4.0 / (x * x);
  for (int k = 0; k < 200; ++k) {
    const double next = term * (k + 0.5) * (nu - 0.5 - k) * r;
    if (next == 0.0) return {sum, 0.0};
    if (std::fabs(next) > prev) break;
    term = next;
    prev = std::fabs(term);
    if (k + 1 >= skip) sum += term;
    if (prev < 1e-18 * std::fabs(t0)) break;
  }
  return {sum, prev};
}

}  // namespace

BesselOrder::BesselOrder(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || std::fabs(nu) >= 100.0)
    throw RangeError("BesselOrder: |nu| must be finite and below 100, got " + std::to_string(nu));
}

double gamma(double x) {
  check_finite(x, "gamma");
  if (is_pole(x)) throw DomainError("gamma: pole at non-positive integer " + std::to_string(x));
  if (x < 0.5) return kPi / (sin_pi(x) * gamma(1.0 - x));
  if (x > 171.62) throw RangeError("gamma: overflow for x = " + std::to_string(x));
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  // t^(z+1/2) e^-t split in two factors to avoid intermediate overflow.
  const double p = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * kPi) * p * (p * std::exp(-t)) * lanczos_sum(z);
}

double log_gamma(double x) {
  check_finite(x, "log_gamma");
  if (is_pole(x)) throw DomainError("log_gamma: pole at non-positive integer " + std::to_string(x));
  if (x < 0.5) return std::log(kPi / std::fabs(sin_pi(x))) - log_gamma(1.0 - x);
  if (x == 1.0 || x == 2.0) return 0.0;
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

int gamma_sign(double x) {
  check_finite(x, "gamma_sign");
  if (is_pole(x)) throw DomainError("gamma_sign: pole at non-positive integer " + std::to_string(x));
  if (x > 0.0) return 1;
  // Gamma alternates sign between consecutive negative integers.
  return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
}

double bessel_j(BesselOrder order, double x) {
  const double nu = order.value();
  check_finite(x, "bessel_j");
  if (x < 0.0) throw DomainError("bessel_j: negative argument");
  if (nu < 0.0 && is_integer(nu)) {
    const double m = -nu;
    const double j = bessel_j(BesselOrder(m), x);
    return (static_cast<long long>(m) % 2 == 0) ? j : -j;
  }
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw DomainError("bessel_j: J_nu(0) diverges for negative non-integer nu");
  }
  if (nu == 0.5) return std::sqrt(2.0 / (std::numbers::pi * x)) * std::sin(x);
  if (nu == -0.5) return std::sqrt(2.0 / (std::numbers::pi * x)) * std::cos(x);
  if (x >= kHankelMin) {
    // Half-integer orders terminate the expansion, so it can win below the series limit.
    const HankelPQ pq = hankel_pq(nu, x);
    if (pq.converged) return bessel_hankel(nu, x, pq);
  }
  if (x < kBesselSeriesLimit) return bessel_series(nu, x);
  return bessel_recurrence(nu, x);
}

bool bessel_hankel_converges(BesselOrder nu, double x) {
  return x > 0.0 && hankel_pq(nu.value(), x).converged;
}

double bessel_y_asymptotic(BesselOrder order, double x) {
  const double nu = order.value();
  check_finite(x, "bessel_y_asymptotic");
  if (x <= 0.0) throw DomainError("bessel_y_asymptotic: argument must be positive");
  const HankelPQ pq = hankel_pq(nu, x);
  if (!pq.converged) throw RangeError("bessel_y_asymptotic: argument too small for the expansion");
  return bessel_y_hankel(nu, x, pq);
}

double struve_minus_y_asymptotic(BesselOrder nu, double x, int skip_terms) {
  if (x <= 0.0) throw DomainError("struve_minus_y_asymptotic: argument must be positive");
  return struve_minus_y_series(nu.value(), x, skip_terms).value;
}

double struve_h(BesselOrder order, double x) {
  const double nu = order.value();
  check_finite(x, "struve_h");
  if (x < 0.0) throw DomainError("struve_h: negative argument");
  if (is_pole(nu + 1.5)) throw RangeError("struve_h: order with nu + 3/2 <= 0 is not supported");
  if (x == 0.0) {
    if (nu > -1.0) return 0.0;
    throw DomainError("struve_h: H_nu(0) diverges for nu <= -1");
  }
  constexpr double kTarget = 1e-8;
  // Error is measured against the oscillation envelope so zeros of H stay reachable.
  const double envelope = x >= 1.0 ? std::sqrt(2.0 / (kPi * x)) : 0.0;
  auto scaled_error = [&](double value, double abs_err) {
    const double scale = std::max(std::fabs(value), envelope);
    return scale > 0.0 ? abs_err / scale : abs_err;
  };
  double best_value = 0.0;
  double best_error = std::numeric_limits<double>::infinity();
  if (x < kStruveSeriesLimit) {
    const SeriesResult s = struve_series(nu, x);
    best_value = s.value;
    best_error = scaled_error(s.value, s.rel_error * std::fabs(s.value));
    if (best_error <= kTarget) return best_value;
  }
  const HankelPQ pq = hankel_pq(nu, x);
  if (pq.converged) {
    const SeriesResult d = struve_minus_y_series(nu, x, 0);
    const double value = bessel_y_hankel(nu, x, pq) + d.value;
    const double err = scaled_error(value, d.rel_error);
    if (err <= kTarget) return value;
    if (err < best_error) {
      best_value = value;
      best_error = err;
    }
  }
  if (x >= kStruveSeriesLimit) {
    const SeriesResult s = struve_series(nu, x);
    const double err = scaled_error(s.value, s.rel_error * std::fabs(s.value));
    if (err <= kTarget) return s.value;
    if (err < best_error) {
      best_value = s.value;
      best_error = err;
    }
  }
  throw AccuracyError("struve_h: no representation reached the target accuracy", best_value, best_error);
}

}  // namespace phin
