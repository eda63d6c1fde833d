#include <benchmark/benchmark.h>

#include <cmath>

#include "trapcub/adaptive.hpp"
#include "trapcub/cubature.hpp"
#include "trapcub/kernels.hpp"

namespace {

using namespace trapcub;

Integrand2D exp_xy() {
  Integrand2D F;
  F.f = [](double x, double y) { return std::exp(x * y); };
  F.d22_sign = D22Sign::nonnegative;
  return F;
}

const Interval kUnit(0, 1);

void BM_ProductTrapezoid(benchmark::State& state) {
  const auto F = exp_xy();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(product_trapezoid(F, kUnit, n).value);
  state.SetItemsProcessed(state.iterations() * (n + 1) * (n + 1));
}
BENCHMARK(BM_ProductTrapezoid)->RangeMultiplier(4)->Range(16, 1024);

void BM_SMinus(benchmark::State& state) {
  const auto F = exp_xy();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s_minus(F, kUnit, n).value);
}
BENCHMARK(BM_SMinus)->RangeMultiplier(4)->Range(16, 1024);

void BM_SPlus(benchmark::State& state) {
  const auto F = exp_xy();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s_plus(F, kUnit, n).value);
}
BENCHMARK(BM_SPlus)->RangeMultiplier(4)->Range(16, 1024);

void BM_Refine(benchmark::State& state) {
  const auto F = exp_xy();
  for (auto _ : state) {
    benchmark::DoNotOptimize(refine(F, kUnit, RefineRule::s_minus, {4, 1e-6, 1024, 1e-12}).final_value);
  }
}
BENCHMARK(BM_Refine);

void BM_DefinitenessScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const KernelSpec spec{KernelKind::phi_plus, kUnit, n, (4.0 * n - 1) / (4.0 * n - 3)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(definiteness_scan(spec, D22Sign::nonpositive, 200 * n).passed());
  }
}
BENCHMARK(BM_DefinitenessScan)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
