#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "cfor/cases.hpp"
#include "cfor/convolution.hpp"
#include "cfor/solver.hpp"

namespace {

std::vector<double> wave(std::size_t n) {
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = std::sin(0.05 * static_cast<double>(i));
  return f;
}

void BM_Derivative(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = wave(n);
  const auto taps = cfor::dsc::build_kernel({1.0, 3.2, 32, 1});
  for (auto _ : state) {
    auto out = cfor::dsc::apply_convolution(f, taps, cfor::dsc::Periodic{});
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_Derivative)->Arg(256)->Arg(4096);

void BM_LowPass(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = wave(n);
  const cfor::dsc::LowPassFilter lp({1.0, 3.2, 32, 0}, {1.0, 2.0, 32, 0});
  for (auto _ : state) {
    auto out = lp.apply(f, cfor::dsc::Periodic{});
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_LowPass)->Arg(256)->Arg(4096);

void BM_VortexRhs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const cfor::euler::GasModel gas;
  const cfor::cases::VortexSpec spec;
  const auto grid = cfor::cases::vortex_grid(spec, n);
  const auto U = cfor::cases::vortex_exact(spec, 0.0, grid, gas);
  const cfor::Scheme scheme(grid, cfor::CforConfig{});
  for (auto _ : state) {
    auto k = scheme.rhs(U);
    benchmark::DoNotOptimize(k.data().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n * n));
}
BENCHMARK(BM_VortexRhs)->Arg(40)->Arg(80);

void BM_ShockFilter(benchmark::State& state) {
  const cfor::euler::GasModel gas;
  const cfor::cases::ShockEntropySpec spec;
  const auto grid = cfor::cases::shock_entropy_grid(spec, 800, gas);
  const auto U = cfor::cases::init_shock_entropy(spec, grid, gas);
  cfor::CforConfig cfg;
  cfg.kernel_rest.r = 2.0;
  const cfor::Scheme scheme(grid, cfg);
  for (auto _ : state) {
    auto F = scheme.filter(U);
    benchmark::DoNotOptimize(F.data().data());
  }
}
BENCHMARK(BM_ShockFilter);

}  // namespace

BENCHMARK_MAIN();
