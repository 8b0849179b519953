#include <benchmark/benchmark.h>

#include "fhdet/exact.hpp"
#include "fhdet/harness.hpp"
#include "fhdet/specfun.hpp"

namespace {

using namespace fhdet;

FHSymbol two_point_symbol() {
  FourierSeries v;
  v.set(1, 0.2);
  v.set(-1, 0.2);
  return FHSymbol(v, {{1.0, 0.3, 0.2}, {4.0, 0.1, -0.25}});
}

void BM_FourierCoefficients(benchmark::State& state) {
  const FHSymbol f = two_point_symbol();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fourier_coefficients(f, -n, n));
}
BENCHMARK(BM_FourierCoefficients)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_ToeplitzDet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto c = fourier_coefficients(two_point_symbol(), -n, n);
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz_det(c, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ToeplitzDet)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed)
    ->Unit(benchmark::kMillisecond);

void BM_HankelDet(benchmark::State& state) {
  const HankelWeight w({}, 0.25, -0.1, {{0.3, 0.0, 0.2}});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hankel_det(w, n));
}
BENCHMARK(BM_HankelDet)->RangeMultiplier(4)->Range(8, 128)->Unit(benchmark::kMillisecond);

void BM_LogBarnesG(benchmark::State& state) {
  Complex z(0.3, -2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_barnes_g(z));
    z += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_LogBarnesG);

}  // namespace
BENCHMARK_MAIN();
