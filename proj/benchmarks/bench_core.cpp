#include <benchmark/benchmark.h>

#include "adsmax/geometry.hpp"
#include "adsmax/isometry.hpp"

using namespace adsmax;

static void BM_BilinearForm(benchmark::State& state) {
  const SplitVector4 x(0.3, -1.2, 0.7, 2.0), y(1.0, 0.2, -0.4, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(bilinear_form(x, y));
}
BENCHMARK(BM_BilinearForm);

static void BM_IsometryFromPair(benchmark::State& state) {
  const Mobius a = Mobius::rotation(0.3) * Mobius::diagonal(1.4);
  const Mobius b = Mobius::rotation(1.1) * Mobius::diagonal(0.8);
  for (auto _ : state) benchmark::DoNotOptimize(isometry_from_pair(a, b));
}
BENCHMARK(BM_IsometryFromPair);

static void BM_CausalClass(benchmark::State& state) {
  const BoundaryPoint p = boundary_point(0.4, 2.2), q = boundary_point(3.0, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(causal_class(p, q));
}
BENCHMARK(BM_CausalClass);

BENCHMARK_MAIN();
