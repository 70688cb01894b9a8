#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "phin/function_expr.hpp"
#include "phin/grid.hpp"
#include "phin/hilbert.hpp"
#include "phin/kernel.hpp"
#include "phin/quadrature.hpp"
#include "phin/specfun.hpp"
#include "phin/stft.hpp"
#include "phin/subspace.hpp"
#include "phin/transform.hpp"

using namespace phin;

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  return out;
}

void BM_BesselJ(benchmark::State& state) {
  const auto xs = linspace(0.1, 60.0, 256);
  const BesselOrder nu(-0.5 + 1.0 / 3.0);
  for (auto _ : state) {
    double acc = 0.0;
    for (double x : xs) acc += bessel_j(nu, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(xs.size()));
}
BENCHMARK(BM_BesselJ);

void BM_StruveH(benchmark::State& state) {
  const auto xs = linspace(0.1, 20.0, 256);
  const BesselOrder nu(0.5);
  for (auto _ : state) {
    double acc = 0.0;
    for (double x : xs) acc += struve_h(nu, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(xs.size()));
}
BENCHMARK(BM_StruveH);

void BM_KernelEven(benchmark::State& state) {
  const Order n(static_cast<int>(state.range(0)));
  const auto etas = linspace(-8.0, 8.0, 256);
  for (auto _ : state) {
    double acc = 0.0;
    for (double eta : etas) acc += kernel_even(n, eta);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(etas.size()));
}
BENCHMARK(BM_KernelEven)->DenseRange(1, 4);

void BM_KernelOdd(benchmark::State& state) {
  const Order n(static_cast<int>(state.range(0)));
  const auto etas = linspace(-8.0, 8.0, 256);
  // The first call for n >= 3 builds the odd-kernel table.
  benchmark::DoNotOptimize(kernel_odd(n, 1.0));
  for (auto _ : state) {
    double acc = 0.0;
    for (double eta : etas) acc += kernel_odd(n, eta);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(etas.size()));
}
BENCHMARK(BM_KernelOdd)->DenseRange(1, 4);

void BM_DiscreteHilbert(benchmark::State& state) {
  SampledGrid g;
  g.origin = -64.0;
  g.spacing = 128.0 / static_cast<double>(state.range(0));
  g.values.resize(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < g.size(); ++i) g.values[i] = std::cos(g.at(i));
  for (auto _ : state) benchmark::DoNotOptimize(discrete_hilbert(g));
}
BENCHMARK(BM_DiscreteHilbert)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

void BM_Project(benchmark::State& state) {
  const FunctionExpr f = FunctionExpr::n_gaussian(1);
  const int j = static_cast<int>(state.range(0));
  const long kmax = (8L << j) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(project(f, j, kmax));
}
BENCHMARK(BM_Project)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_AtomImageTable(benchmark::State& state) {
  const int j = 4;
  const long kmax = 127;
  const auto omegas = linspace(-8.0, 8.0, 257);
  for (auto _ : state) benchmark::DoNotOptimize(AtomImageTable(Order(2), j, kmax, omegas));
}
BENCHMARK(BM_AtomImageTable)->Unit(benchmark::kMillisecond);

void BM_TableApply(benchmark::State& state) {
  const int j = 4;
  const long kmax = 127;
  const AtomImageTable table(Order(2), j, kmax, linspace(-8.0, 8.0, 257));
  const HaarCoeffs c = project(FunctionExpr::n_gaussian(2), j, kmax);
  for (auto _ : state) benchmark::DoNotOptimize(table.apply(c, Direction::forward));
}
BENCHMARK(BM_TableApply);

void BM_PhiIntegral(benchmark::State& state) {
  const FunctionExpr f = FunctionExpr::n_gaussian(2);
  for (auto _ : state) benchmark::DoNotOptimize(phi_integral(Order(2), f, 1.5));
}
BENCHMARK(BM_PhiIntegral)->Unit(benchmark::kMillisecond);

void BM_StftEngine(benchmark::State& state) {
  const FunctionExpr g = FunctionExpr::n_gaussian(1);
  const FunctionExpr h = FunctionExpr::n_gaussian(1);
  const UniformAxis omega = UniformAxis::from_range(-4.0, 4.0, 0.25);
  const UniformAxis t = UniformAxis::from_range(-3.0, 3.0, 0.25);
  StftOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(stft_compute(Order(1), g, h, omega, t, opts));
}
BENCHMARK(BM_StftEngine)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
