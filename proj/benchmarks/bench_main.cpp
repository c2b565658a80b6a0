// Microbenchmarks for the hot paths: tone synthesis, pink-noise generation,
// hub integration, grid stepping, and Welch PSD.
#include <benchmark/benchmark.h>

#include "rootcomm/analysis.hpp"
#include "rootcomm/channel.hpp"
#include "rootcomm/config.hpp"
#include "rootcomm/grid.hpp"
#include "rootcomm/hub.hpp"
#include "rootcomm/rng.hpp"

using namespace rootcomm;

static void BM_SynthesizeReceived(benchmark::State& state) {
  SoilMedium medium;
  SourceSpec spec;
  for (auto _ : state) {
    RngStream rng(1, 0);
    auto trace = synthesize_received(medium, spec, 1.0, 1.0, 0.0005, rng);
    benchmark::DoNotOptimize(trace.samples.data());
  }
}
BENCHMARK(BM_SynthesizeReceived);

static void BM_PinkNoise(benchmark::State& state) {
  for (auto _ : state) {
    RngStream rng(1, 1);
    auto trace = pink_noise(10.0, 0.0005, 1e-6, rng);
    benchmark::DoNotOptimize(trace.samples.data());
  }
}
BENCHMARK(BM_PinkNoise);

static void BM_HubRun(benchmark::State& state) {
  HubParams p;
  for (auto _ : state) {
    HubState s;
    for (int i = 0; i < 300; ++i) s = hub_step(s, 10.0, p);
    benchmark::DoNotOptimize(s.c_c_nm);
  }
}
BENCHMARK(BM_HubRun);

static void BM_GridStep(benchmark::State& state) {
  GridParams p;
  AuxinGrid grid = build_grid(p, GridModifiers{});
  for (auto _ : state) {
    grid_step(grid, p, p.dt_min);
    benchmark::DoNotOptimize(grid.a.data());
  }
}
BENCHMARK(BM_GridStep);

static void BM_WelchPsd(benchmark::State& state) {
  RngStream rng(1, 2);
  auto trace = pink_noise(10.0, 0.0005, 1.0, rng);
  for (auto _ : state) {
    auto psd = welch_psd(trace, 4096);
    benchmark::DoNotOptimize(psd.power.data());
  }
}
BENCHMARK(BM_WelchPsd);

BENCHMARK_MAIN();
