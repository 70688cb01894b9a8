#include <catch_amalgamated.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "generators.hpp"
#include "phin/error.hpp"
#include "phin/function_expr.hpp"
#include "phin/quadrature.hpp"
#include "phin/stft.hpp"

using namespace phin;
using phin::test::Gen;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

FunctionExpr normalized_g1() { return FunctionExpr::scaled(std::pow(kPi, -0.25), FunctionExpr::n_gaussian(1)); }

FunctionExpr normalized(const FunctionExpr& f) {
  return FunctionExpr::scaled(1.0 / std::sqrt(inner_product(f, f).value.real()), f);
}

// Windowed Fourier transform of g1 under the window pi^(-1/4) g1, in closed form.
cplx classical_stft(double w, double t) {
  return std::pow(kPi, 0.25) / std::sqrt(2.0 * kPi) * std::exp(cplx(-(t * t + w * w) / 4.0, -w * t / 2.0));
}

double relative_residual(const StftReconstructor& rec, const FunctionExpr& h) {
  std::vector<double> ts;
  for (int i = 0; i < 480; ++i) ts.push_back(-3.0 + 6.0 * (i + 0.5) / 480.0);
  const auto v = rec(ts);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    num += std::norm(v[i] - h(ts[i]));
    den += std::norm(h(ts[i]));
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("default axes") {
  const UniformAxis w = default_stft_omega_axis();
  const UniformAxis t = default_stft_t_axis();
  CHECK(w.lo == -8.0);
  CHECK(w.step == 1.0 / 16.0);
  CHECK(w.size() == 257);
  CHECK(w.hi() == 8.0);
  CHECK(t.lo == -6.0);
  CHECK(t.size() == 193);
}

TEST_CASE("spectrogram value at the origin") {
  const UniformAxis w = UniformAxis::from_range(-1.0, 1.0, 0.5);
  const UniformAxis t = UniformAxis::from_range(-1.0, 1.0, 0.5);
  const Spectrogram s = stft_compute(Order(1), normalized_g1(), FunctionExpr::n_gaussian(1), w, t);
  const cplx want = std::pow(kPi, -0.25) * std::sqrt(kPi) / std::sqrt(2.0 * kPi);
  CHECK(std::abs(s.at(2, 2) - want) <= 1e-4);
  const StftOptions quad{6, StftMode::quadrature};
  const Spectrogram q = stft_compute(Order(1), normalized_g1(), FunctionExpr::n_gaussian(1), w, t, quad);
  CHECK(std::abs(q.at(2, 2) - want) <= 1e-8);
  CHECK_THAT(s.window_norm_sq(), WithinRel(1.0, 1e-10));
}

TEST_CASE("zero signal gives a zero spectrogram") {
  const FunctionExpr zero = FunctionExpr::scaled(0.0, FunctionExpr::n_gaussian(1));
  const UniformAxis w = UniformAxis::from_range(-2.0, 2.0, 0.5);
  const UniformAxis t = UniformAxis::from_range(-2.0, 2.0, 0.5);
  const Spectrogram s = stft_compute(Order(2), normalized_g1(), zero, w, t);
  for (const auto& v : s.values()) CHECK(v == cplx(0.0));
  CHECK(stft_energy(s) == 0.0);
  CHECK(stft_reconstruct(s, normalized_g1(), 0.3) == cplx(0.0));
}

TEST_CASE("n = 1 agrees with the classical windowed Fourier transform") {
  Gen gen(0x57f70001);
  const StftOptions quad{6, StftMode::quadrature};
  for (int i = 0; i < 5; ++i) {
    const double w = gen.real(-4.0, 4.0);
    const double t = gen.real(-3.0, 3.0);
    const UniformAxis wa{w, 1.0, 1};
    const UniformAxis ta{t, 1.0, 1};
    const Spectrogram q = stft_compute(Order(1), normalized_g1(), FunctionExpr::n_gaussian(1), wa, ta, quad);
    const Spectrogram e = stft_compute(Order(1), normalized_g1(), FunctionExpr::n_gaussian(1), wa, ta);
    CAPTURE(w, t);
    CHECK(std::abs(q.at(0, 0) - classical_stft(w, t)) <= 1e-6);
    CHECK(std::abs(e.at(0, 0) - classical_stft(w, t)) <= 1e-3);
  }
}

TEST_CASE("energy equals the signal norm for a normalized window") {
  const Spectrogram s = stft_compute(Order(1), normalized_g1(), FunctionExpr::n_gaussian(1),
                                     default_stft_omega_axis(), default_stft_t_axis());
  CHECK_THAT(stft_energy(s), WithinRel(std::sqrt(kPi), 1e-2));
  CHECK_THAT(stft_inner(s, s).real(), WithinRel(stft_energy(s), 1e-14));
}

TEST_CASE("energy scales with the window norm") {
  const FunctionExpr g = FunctionExpr::scaled(std::sqrt(2.0), normalized_g1());
  const Spectrogram s =
      stft_compute(Order(2), g, FunctionExpr::n_gaussian(1), default_stft_omega_axis(), default_stft_t_axis());
  CHECK_THAT(s.window_norm_sq(), WithinRel(2.0, 1e-10));
  CHECK_THAT(stft_energy(s), WithinRel(2.0 * std::sqrt(kPi), 1e-2));
}

TEST_CASE("orthogonality relation") {
  const UniformAxis w = default_stft_omega_axis();
  const UniformAxis t = default_stft_t_axis();
  const FunctionExpr g1 = FunctionExpr::n_gaussian(1);
  SECTION("orthogonal windows") {
    const FunctionExpr even = normalized(FunctionExpr::haar_even(HaarIndex(0, 0)));
    const FunctionExpr odd = normalized(FunctionExpr::haar_odd(HaarIndex(0, 0)));
    CHECK(std::abs(stft_orthogonality(Order(1), even, odd, g1, g1, w, t)) <= 1e-2);
  }
  SECTION("equal windows and signals") {
    const cplx v = stft_orthogonality(Order(1), normalized_g1(), normalized_g1(), g1, g1, w, t);
    CHECK(std::abs(v - std::sqrt(kPi)) <= 1e-2 * std::sqrt(kPi));
  }
  SECTION("dilated second signal") {
    const FunctionExpr h2 = FunctionExpr::dilate(2.0, g1);
    const double want = inner_product(g1, h2).value.real();
    CHECK_THAT(want, WithinRel(1.5853309190424044053, 1e-10));
    const cplx v = stft_orthogonality(Order(1), normalized_g1(), normalized_g1(), g1, h2, w, t);
    CHECK(std::abs(v - want) <= 1e-2 * want);
  }
}

TEST_CASE("reconstruction of the Gaussian") {
  const Spectrogram s = stft_compute(Order(1), normalized_g1(), FunctionExpr::n_gaussian(1),
                                     default_stft_omega_axis(), default_stft_t_axis());
  const StftReconstructor rec(s, normalized_g1());
  for (double t : {0.0, 0.5, 1.0}) {
    CAPTURE(t);
    CHECK(std::abs(rec(t) - std::exp(-t * t / 2.0)) <= 1e-2);
    CHECK(std::abs(stft_reconstruct(s, normalized_g1(), t) - rec(t)) <= 1e-14);
  }
}

TEST_CASE("reconstruction of a smoothed atom for n = 2 converges") {
  // phi+_{0,0} convolved with a unit-mass Gaussian of width 1/2.
  const FunctionExpr h = FunctionExpr::custom(
      [](double t) { return cplx(0.25 * (std::erf((t + 1.0) / 0.5) - std::erf((t - 1.0) / 0.5))); }, Parity::even,
      TailClass::rapid, 4.0, {}, "smoothed atom");
  const FunctionExpr g = normalized(FunctionExpr::n_gaussian(2));
  const Spectrogram coarse =
      stft_compute(Order(2), g, h, UniformAxis::from_range(-8.0, 8.0, 0.125), UniformAxis::from_range(-6.0, 6.0, 0.125));
  const Spectrogram fine = stft_compute(Order(2), g, h, default_stft_omega_axis(), default_stft_t_axis());
  const double r_coarse = relative_residual(StftReconstructor(coarse, g), h);
  const double r_fine = relative_residual(StftReconstructor(fine, g), h);
  CAPTURE(r_coarse, r_fine);
  CHECK(r_fine <= 5e-2);
  CHECK(r_fine < r_coarse);
}

TEST_CASE("thread count does not change results") {
  const UniformAxis w = UniformAxis::from_range(-4.0, 4.0, 0.25);
  const UniformAxis t = UniformAxis::from_range(-3.0, 3.0, 0.25);
  StftOptions one;
  one.threads = 1;
  StftOptions many;
  many.threads = 4;
  const Spectrogram a = stft_compute(Order(2), normalized_g1(), FunctionExpr::n_gaussian(2), w, t, one);
  const Spectrogram b = stft_compute(Order(2), normalized_g1(), FunctionExpr::n_gaussian(2), w, t, many);
  CHECK(a.values() == b.values());
}

TEST_CASE("spectrogram validation") {
  const FunctionExpr zero = FunctionExpr::scaled(0.0, FunctionExpr::n_gaussian(1));
  const UniformAxis w = UniformAxis::from_range(-1.0, 1.0, 0.5);
  CHECK_THROWS_AS(stft_compute(Order(1), zero, FunctionExpr::n_gaussian(1), w, w), DegenerateError);
  CHECK_THROWS_AS(Spectrogram(Order(1), w, w, std::vector<cplx>(3), 1.0), ShapeError);
  CHECK_THROWS_AS(Spectrogram(Order(1), w, w, std::vector<cplx>(25), 0.0), DomainError);
  const Spectrogram a(Order(1), w, w, std::vector<cplx>(25), 1.0);
  const UniformAxis w2 = UniformAxis::from_range(-1.0, 1.0, 0.25);
  const Spectrogram b(Order(1), w2, w, std::vector<cplx>(45), 1.0);
  CHECK_THROWS_AS(stft_inner(a, b), ShapeError);
}
