#include <benchmark/benchmark.h>

#include "grmin/extremal.hpp"
#include "grmin/geomeans.hpp"
#include "grmin/optimizer.hpp"
#include "grmin/plucker.hpp"
#include "grmin/reconstruct.hpp"

using namespace grmin;

static void BM_Minors(benchmark::State& state) {
  const PointMatrix X = cyclic_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(minors(X));
  }
}
BENCHMARK(BM_Minors)->Arg(8)->Arg(16)->Arg(32);

static void BM_GeometricMeans(benchmark::State& state) {
  const PluckerVector P = minors(cyclic_matrix(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_means(P));
  }
}
BENCHMARK(BM_GeometricMeans)->Arg(8)->Arg(16)->Arg(32);

static void BM_CertifyPoint(benchmark::State& state) {
  const PointMatrix X = to_matrix(sample_positive(static_cast<int>(state.range(0)), 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_point(X));
  }
}
BENCHMARK(BM_CertifyPoint)->Arg(6)->Arg(10);

static void BM_PositiveReduction(benchmark::State& state) {
  const PointMatrix X = to_matrix(sample_positive(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(positive_reduction(X));
  }
}
BENCHMARK(BM_PositiveReduction)->Arg(8)->Arg(32);

static void BM_Reconstruct(benchmark::State& state) {
  const OuterOrbitData data = extract_outer_orbits(
      minors(to_matrix(sample_positive(static_cast<int>(state.range(0)), 3))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(data));
  }
}
BENCHMARK(BM_Reconstruct)->Arg(7)->Arg(15);

static void BM_Minimize(benchmark::State& state) {
  OptimizerConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.restarts = 1;
  cfg.seed = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize(cfg));
  }
}
BENCHMARK(BM_Minimize)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
