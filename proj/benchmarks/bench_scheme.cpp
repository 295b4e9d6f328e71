#include <benchmark/benchmark.h>

#include "langmuir/initcurves.hpp"
#include "langmuir/kernel.hpp"
#include "langmuir/scheme.hpp"

namespace {

using namespace langmuir;

void BM_AssembleInteraction(benchmark::State& state) {
  const auto curve = sample(AnalyticCurve::bola(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_interaction(curve));
  }
}
BENCHMARK(BM_AssembleInteraction)->Arg(100)->Arg(200)->Arg(400);

void BM_BuildBlockSystem(benchmark::State& state) {
  const auto curve = sample(AnalyticCurve::bola(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_block_system(curve, 1e-2));
  }
}
BENCHMARK(BM_BuildBlockSystem)->Arg(100)->Arg(200)->Arg(400);

void BM_Step(benchmark::State& state) {
  const auto initial = initial_state(sample(AnalyticCurve::bola(), static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(step(initial, 1e-2));
  }
}
BENCHMARK(BM_Step)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_OffCurveVelocity(benchmark::State& state) {
  const auto samples = sample_smooth(AnalyticCurve::bola(), static_cast<int>(state.range(0)));
  const Vec2 x{150.0, 90.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(off_curve_velocity(samples, x));
  }
}
BENCHMARK(BM_OffCurveVelocity)->Arg(512)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
