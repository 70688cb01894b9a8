#include <catch_amalgamated.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "generators.hpp"
#include "phin/error.hpp"
#include "phin/function_expr.hpp"
#include "phin/haar.hpp"
#include "phin/hilbert.hpp"
#include "phin/quadrature.hpp"
#include "phin/subspace.hpp"

using namespace phin;
using phin::test::Gen;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// ||f - g||_2 over [-R, R] with breakpoints at every level-j cell edge.
double l2_distance(const std::function<std::complex<double>(double)>& f,
                   const std::function<std::complex<double>(double)>& g, int j, double radius) {
  std::vector<double> edges;
  const double cell = std::ldexp(1.0, -j);
  for (double x = -radius; x <= radius + 0.5 * cell; x += cell) edges.push_back(x);
  const auto r = integrate([&](double t) { return std::complex<double>(std::norm(f(t) - g(t))); }, -radius, radius,
                           edges, QuadOpts{1e-12, 1e-10, 40, 0.0, false});
  return std::sqrt(r.value.real());
}

double max_abs(const HaarCoeffs::Vec& v, std::size_t from = 0) {
  double m = 0.0;
  for (std::size_t k = from; k < v.size(); ++k) m = std::max(m, std::abs(v[k]));
  return m;
}

}  // namespace

TEST_CASE("atom_even_eval examples") {
  CHECK(atom_even_eval(HaarIndex(0, 0), 0.5) == 0.5);
  CHECK(atom_even_eval(HaarIndex(0, 0), -0.5) == 0.5);
  CHECK(atom_even_eval(HaarIndex(1, 3), 1.0) == 0.0);
  CHECK(atom_even_eval(HaarIndex(1, 3), 1.75) == 0.5);
  CHECK(atom_even_eval(HaarIndex(1, 3), -1.5) == 0.5);
  CHECK(atom_even_eval(HaarIndex(1, 3), 2.0) == 0.0);
  CHECK(atom_even_eval(HaarIndex(2, 0), 0.0) == 0.5);
}

TEST_CASE("gram_even examples") {
  CHECK(gram_even(0, 0, 0) == 0.5);
  CHECK(gram_even(0, 1, 2) == 0.0);
  CHECK(gram_even(2, 5, 5) == 0.125);
  CHECK_THROWS_AS(gram_even(0, -1, 0), DomainError);
}

TEST_CASE("gram_even matches quadrature") {
  for (int j = 0; j <= 2; ++j) {
    for (long k = 0; k <= 3; ++k) {
      const HaarIndex a(j, k);
      const auto r = inner_product(FunctionExpr::haar_even(a), FunctionExpr::haar_even(a));
      CAPTURE(j, k);
      CHECK_THAT(r.value.real(), WithinAbs(gram_even(j, k, k), 1e-12));
    }
  }
}

TEST_CASE("Haar index and coefficient validation") {
  CHECK_THROWS_AS(HaarIndex(0, -1), DomainError);
  CHECK_THROWS_AS(HaarIndex(31, 0), RangeError);
  CHECK_THROWS_AS(HaarCoeffs(0, {1.0, 2.0}, {1.0}), ShapeError);
  CHECK_THROWS_AS(HaarCoeffs(0, {}, {}), ShapeError);
  const HaarCoeffs z = HaarCoeffs::zeros(2, 4);
  CHECK(z.kmax() == 4);
  CHECK(z.norm_sq() == 0.0);
  CHECK(z.even_only());
  CHECK(z.odd_only());
  const HaarCoeffs c(1, {1.0, 0.0}, {0.0, 2.0});
  CHECK(c.norm_sq() == 0.25 * 5.0);
}

TEST_CASE("projecting the even atom returns a unit coefficient") {
  const HaarCoeffs c = project(FunctionExpr::haar_even(HaarIndex(0, 0)), 0, 7);
  CHECK_THAT(c.even()[0].real(), WithinAbs(1.0, 1e-12));
  CHECK(max_abs(c.even(), 1) <= 1e-12);
  CHECK(max_abs(c.odd()) <= 1e-6);
}

TEST_CASE("projecting the odd atom returns a unit odd coefficient") {
  const HaarCoeffs c = project(FunctionExpr::haar_odd(HaarIndex(0, 0)), 0, 7);
  CHECK_THAT(c.odd()[0].real(), WithinAbs(1.0, 1e-3));
  CHECK(max_abs(c.odd(), 1) <= 1e-3);
  CHECK(max_abs(c.even()) <= 1e-6);
}

TEST_CASE("Gaussian projection at level 4 reaches the best Haar approximation") {
  const FunctionExpr g1 = FunctionExpr::n_gaussian(1);
  const HaarCoeffs c = project(g1, 4, 127);
  auto rec = [&](double t) { return reconstruct_eval(c, t); };
  auto exact = [&](double t) { return g1(t); };
  const double err = l2_distance(rec, exact, 4, 8.0);
  // Best L2 approximation by level-4 cell averages; the projection is that approximation.
  const double best = 0.016982;
  CHECK(err <= best * 1.001);
  CHECK(err >= best * 0.999);
  CHECK_THAT(reconstruct_eval(c, 1.0).real(), WithinAbs(std::exp(-0.5), 0.02));
}

TEST_CASE("Gaussian projection at level 5 is within 0.01 in L2") {
  const FunctionExpr g1 = FunctionExpr::n_gaussian(1);
  const HaarCoeffs c = project(g1, 5, 255);
  const double err = l2_distance([&](double t) { return reconstruct_eval(c, t); }, [&](double t) { return g1(t); },
                                 5, 8.0);
  CHECK(err <= 0.01);
}

TEST_CASE("reconstruct_eval examples") {
  const HaarCoeffs unit(0, {1.0}, {0.0});
  CHECK(reconstruct_eval(unit, 0.25) == std::complex<double>(0.5));
  CHECK(reconstruct_eval(HaarCoeffs::zeros(0, 3), 0.7) == std::complex<double>(0.0));
  const HaarCoeffs odd(1, {0.0, 0.0}, {0.0, 1.0});
  CHECK(reconstruct_eval(odd, 0.25) == std::complex<double>(odd_atom_eval(1, 1, 0.25)));
  CHECK_THROWS_AS(reconstruct_eval(odd, 0.5), SingularityError);
}

TEST_CASE("project rejects grids that cannot hold the atoms") {
  CHECK_THROWS_AS(project(FunctionExpr::n_gaussian(1), 0, 100, ProjectionGrid{64, 1.5}), RangeError);
  CHECK_THROWS_AS(project(FunctionExpr::n_gaussian(1), 0, 3, ProjectionGrid{100, 1.5}), ShapeError);
  CHECK_THROWS_AS(project(FunctionExpr::n_gaussian(1), 0, -1), DomainError);
}

TEST_CASE("Parseval on coefficients") {
  Gen gen(0x5b5a0001);
  for (int trial = 0; trial < 6; ++trial) {
    const int j = gen.integer(0, 2);
    const HaarCoeffs c = gen.coeffs(j, 4, true, true);
    // Log singularities sit on cell edges, which are breakpoints. Beyond R the
    // reconstruction is A/t + O(1/t^3) with A = sum odd[k] 2^-j / pi.
    const double radius = 128.0;
    const double norm = l2_distance([&](double t) { return reconstruct_eval(c, t); },
                                    [](double) { return std::complex<double>(); }, j, radius);
    std::complex<double> a;
    for (const auto& v : c.odd()) a += v * std::ldexp(1.0, -j) / std::numbers::pi;
    const double total = norm * norm + 2.0 * std::norm(a) / radius;
    CAPTURE(j, c.kmax());
    CHECK_THAT(total, WithinRel(c.norm_sq(), 1e-3));
  }
}

TEST_CASE("projection is idempotent on the subspace") {
  Gen gen(0x5b5a0002);
  for (int trial = 0; trial < 8; ++trial) {
    const int j = gen.integer(0, 2);
    const HaarCoeffs c = gen.coeffs(j, 6, true, true);
    const HaarCoeffs p = project(FunctionExpr::haar_coeffs(c), j, c.kmax(), ProjectionGrid{std::size_t{1} << 16});
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      worst = std::max({worst, std::abs(p.even()[k] - c.even()[k]), std::abs(p.odd()[k] - c.odd()[k])});
      scale = std::max({scale, std::abs(c.even()[k]), std::abs(c.odd()[k])});
    }
    CAPTURE(j, c.kmax(), scale);
    CHECK(worst <= 1e-3 * scale);
  }
}

TEST_CASE("projection separates even and odd parts") {
  Gen gen(0x5b5a0003);
  for (int trial = 0; trial < 6; ++trial) {
    const double a = gen.real(0.5, 2.0);
    const double b = gen.real(-1.0, 1.0);
    // Declared without parity so the split is computed from samples.
    const FunctionExpr even = FunctionExpr::custom(
        [=](double t) { return std::complex<double>(std::exp(-a * t * t) * (1.0 + b * t * t)); }, Parity::none,
        TailClass::rapid, 12.0, {}, "even");
    const FunctionExpr odd = FunctionExpr::custom(
        [=](double t) { return std::complex<double>(t * std::exp(-a * t * t) * (1.0 + b * t * t)); }, Parity::none,
        TailClass::rapid, 12.0, {}, "odd");
    CAPTURE(a, b);
    CHECK(max_abs(project(even, 3, 31).odd()) <= 1e-6);
    CHECK(max_abs(project(odd, 3, 31).even()) <= 1e-6);
  }
}
