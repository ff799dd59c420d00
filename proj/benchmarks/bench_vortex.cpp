#include <benchmark/benchmark.h>

#include "adsmax/vortex.hpp"

using namespace adsmax;

static void BM_VortexSolveFlat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GridDomain g = GridDomain::with_spacing(0, 1, 0, 1, 1.0 / n);
  g.dirichlet = [](double x, double) { return x < 1e-12 ? 0.1 : 0.0; };
  const VortexProblem p = VortexProblem::flat(g, 1.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VortexSolveFlat)->Arg(32)->Arg(64)->Arg(128)->Complexity();
