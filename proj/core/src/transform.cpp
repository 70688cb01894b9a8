#include "phin/transform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phin/error.hpp"
#include "phin/hilbert.hpp"
#include "phin/specfun.hpp"
#include "phin/subspace.hpp"

namespace phin {

namespace {

constexpr double kSmallOmega = 1e-4;
constexpr int kMaxEigenOrder = 8;

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Two-term expansion of the atom image about omega = 0.
double atom_image_small(int n, double a, double b, double omega) {
  const double c0 = coeff_c(Order(n), 0);
  const double mu = 1.0 / (2.0 * n);
  const double alpha = std::pow(std::fabs(omega), n) / n;
  const double q = 0.25 * alpha * alpha / (mu + 1.0);
  return c0 * ((a - b) - q * (std::pow(a, 2 * n + 1) - std::pow(b, 2 * n + 1)));
}

// sqrt(x) J_mu(alpha x^n), the antiderivative term of the atom image.
double edge_term(int n, double alpha, double x) {
  if (x == 0.0) return 0.0;
  return std::sqrt(x) * bessel_j(BesselOrder(1.0 / (2.0 * n)), alpha * std::pow(x, n));
}

// Returns sum_k w_k E_k(omega) for a coefficient array.
std::complex<double> weighted_images(int n, int j, const HaarCoeffs::Vec& w, double omega) {
  const double x = std::fabs(omega);
  std::complex<double> acc;
  if (x < kSmallOmega) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] == 0.0) continue;
      const double b = std::ldexp(static_cast<double>(k), -j);
      const double a = std::ldexp(static_cast<double>(k + 1), -j);
      acc += w[k] * atom_image_small(n, a, b, x);
    }
    return acc;
  }
  const double alpha = std::pow(x, n) / n;
  // Abel summation: sum_k w_k (B_{k+1} - B_k) = sum_p B_p (w_{p-1} - w_p).
  const std::size_t size = w.size();
  for (std::size_t p = 1; p <= size; ++p) {
    const std::complex<double> dw = w[p - 1] - (p < size ? w[p] : std::complex<double>{});
    if (dw == 0.0) continue;
    acc += dw * edge_term(n, alpha, std::ldexp(static_cast<double>(p), -j));
  }
  return acc / (2.0 * std::sqrt(x));
}

bool all_zero(const HaarCoeffs::Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& z) { return z == 0.0; });
}

}  // namespace

EigenSpec::EigenSpec(Order n_, int m_) : n(n_), m(m_) {
  if (m_ < 0) throw DomainError("EigenSpec: m must be non-negative");
  if (m_ > kMaxEigenOrder) throw RangeError("EigenSpec: m must not exceed 8");
}

double atom_image(Order order, HaarIndex idx, double omega) {
  if (!std::isfinite(omega)) throw DomainError("atom_image: non-finite omega");
  const int n = order.value();
  const double x = std::fabs(omega);
  const double a = idx.outer();
  const double b = idx.inner();
  if (x < kSmallOmega) return atom_image_small(n, a, b, x);
  const double alpha = std::pow(x, n) / n;
  return (edge_term(n, alpha, a) - edge_term(n, alpha, b)) / (2.0 * std::sqrt(x));
}

std::complex<double> transform_coeffs(Order order, const HaarCoeffs& c, Direction dir, double omega) {
  if (!std::isfinite(omega)) throw DomainError("transform_coeffs: non-finite omega");
  const int n = order.value();
  std::complex<double> result;
  if (!all_zero(c.even())) result += weighted_images(n, c.j(), c.even(), omega);
  const double s = sgn(omega);
  if (s != 0.0 && !all_zero(c.odd())) {
    const std::complex<double> factor(0.0, dir == Direction::forward ? -s : s);
    result += factor * weighted_images(n, c.j(), c.odd(), omega);
  }
  return result;
}

std::vector<std::complex<double>> transform_coeffs(Order order, const HaarCoeffs& c, Direction dir,
                                                   const std::vector<double>& omegas) {
  return AtomImageTable(order, c.j(), c.kmax(), omegas).apply(c, dir);
}

AtomImageTable::AtomImageTable(Order n, int j, long kmax, std::vector<double> omegas)
    : n_(n), j_(j), kmax_(kmax), omegas_(std::move(omegas)) {
  if (kmax < 0) throw DomainError("AtomImageTable: kmax must be non-negative");
  const auto width = static_cast<std::size_t>(kmax + 2);
  edges_.assign(omegas_.size() * width, 0.0);
  const int order = n.value();
  for (std::size_t i = 0; i < omegas_.size(); ++i) {
    const double w = omegas_[i];
    if (!std::isfinite(w)) throw DomainError("AtomImageTable: non-finite omega");
    const double x = std::fabs(w);
    if (x < kSmallOmega) continue;
    const double alpha = std::pow(x, order) / order;
    for (std::size_t p = 1; p < width; ++p)
      edges_[i * width + p] = edge_term(order, alpha, std::ldexp(static_cast<double>(p), -j));
  }
}

std::complex<double> AtomImageTable::apply(const HaarCoeffs& c, Direction dir, std::size_t i) const {
  if (c.j() != j_ || c.kmax() > kmax_) throw ShapeError("AtomImageTable: coefficients do not fit the table");
  const double w = omegas_.at(i);
  const double x = std::fabs(w);
  if (x < kSmallOmega) return transform_coeffs(n_, c, dir, w);
  const auto width = static_cast<std::size_t>(kmax_ + 2);
  const double* row = edges_.data() + i * width;
  const auto& ev = c.even();
  const auto& od = c.odd();
  const std::size_t size = c.size();
  std::complex<double> even_sum;
  std::complex<double> odd_sum;
  for (std::size_t p = 1; p <= size; ++p) {
    const std::complex<double> de = ev[p - 1] - (p < size ? ev[p] : std::complex<double>{});
    const std::complex<double> dd = od[p - 1] - (p < size ? od[p] : std::complex<double>{});
    even_sum += de * row[p];
    odd_sum += dd * row[p];
  }
  const double scale = 1.0 / (2.0 * std::sqrt(x));
  const std::complex<double> factor(0.0, dir == Direction::forward ? -sgn(w) : sgn(w));
  return scale * (even_sum + factor * odd_sum);
}

std::vector<std::complex<double>> AtomImageTable::apply(const HaarCoeffs& c, Direction dir) const {
  std::vector<std::complex<double>> out(omegas_.size());
  for (std::size_t i = 0; i < omegas_.size(); ++i) out[i] = apply(c, dir, i);
  return out;
}

double gaussian_image(Order order, double omega) {
  const int n = order.value();
  return std::exp(-std::pow(omega * omega, n) / (2.0 * n));
}

std::vector<double> eigen_polynomial(const EigenSpec& spec) {
  const double s = 1.0 / (4.0 * spec.n.value());
  std::vector<double> q = {1.0};
  for (int step = 0; step < spec.m; ++step) {
    // Q <- s Q + u Q' - u Q
    std::vector<double> next(q.size() + 1, 0.0);
    for (std::size_t p = 0; p < q.size(); ++p) {
      next[p] += (s + static_cast<double>(p)) * q[p];
      next[p + 1] -= q[p];
    }
    q = std::move(next);
  }
  return q;
}

double eigenfunction_eval(const EigenSpec& spec, double x) {
  if (!std::isfinite(x)) throw DomainError("eigenfunction_eval: non-finite x");
  const int n = spec.n.value();
  const double u = std::pow(x * x, n) / (2.0 * n);
  const std::vector<double> q = eigen_polynomial(spec);
  double poly = 0.0;
  for (auto it = q.rbegin(); it != q.rend(); ++it) poly = poly * u + *it;
  return std::exp(-u) * poly;
}

ImaginaryEigenvector plusminus_i_eigvec(Order order, const HaarCoeffs& c) {
  if (!c.odd_only()) throw DegenerateError("plusminus_i_eigvec: coefficients must be odd-only");
  if (all_zero(c.odd())) throw DegenerateError("plusminus_i_eigvec: coefficients are all zero");
  const FunctionExpr g = FunctionExpr::haar_coeffs(c);
  auto phi_g = [order, c](double t) { return transform_coeffs(order, c, Direction::forward, t); };
  auto first = [g, phi_g](double t) { return g(t) - std::complex<double>(0.0, 1.0) * phi_g(t); };

  // Probe off the dyadic grid, where the odd atoms are finite.
  const double cell = std::ldexp(1.0, -c.j());
  double size_g = 0.0;
  double size_first = 0.0;
  for (int i = 1; i <= 64; ++i) {
    const double t = (0.37 + 0.5 * i) * cell * 0.25 + 0.013 * i;
    size_g = std::max(size_g, std::abs(g(t)));
    size_first = std::max(size_first, std::abs(first(t)));
  }
  if (size_first > 1e-12 * size_g) return {first, {0.0, 1.0}, true};
  auto second = [g, phi_g](double t) { return std::complex<double>(0.0, -1.0) * g(t) + phi_g(t); };
  return {second, {0.0, -1.0}, false};
}

FunctionExpr dilate(double alpha, const FunctionExpr& f) { return FunctionExpr::dilate(alpha, f); }

FunctionExpr image_function(Order order, const HaarCoeffs& c, Direction dir) {
  Parity parity = Parity::none;
  if (c.even_only()) parity = Parity::even;
  else if (c.odd_only()) parity = Parity::odd;
  std::vector<double> breaks;
  if (!c.even_only()) breaks.push_back(0.0);
  return FunctionExpr::custom([order, c, dir](double w) { return transform_coeffs(order, c, dir, w); }, parity,
                              TailClass::algebraic, std::numeric_limits<double>::infinity(), std::move(breaks),
                              "image:n=" + std::to_string(order.value()));
}

}  // namespace phin
