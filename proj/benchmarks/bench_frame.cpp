#include <benchmark/benchmark.h>

#include "adsmax/frame.hpp"
#include "adsmax/osculating.hpp"

using namespace adsmax;

static void BM_FrameIntegrationHoro(benchmark::State& state) {
  const ConstantSource src;
  const std::vector<Cplx> path{Cplx(0, 0), Cplx(1.0, 0.5)};
  const Matrix4cd f0 = horospherical_ref().frame(path.front());
  IntegrateOptions opts;
  opts.step = 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(integrate_frame(path, src, f0, opts));
}
BENCHMARK(BM_FrameIntegrationHoro);

static void BM_RayLimitSynthetic(benchmark::State& state) {
  const SyntheticDecaySource src(5e-4);
  RayLimitOptions opts;
  opts.t_max = 40.0;
  opts.cauchy_tol = 1e-5;
  for (auto _ : state)
    benchmark::DoNotOptimize(ray_limit(kPi / 12.0, 0.5, src, opts));
}
BENCHMARK(BM_RayLimitSynthetic);
