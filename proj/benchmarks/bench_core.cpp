#include <benchmark/benchmark.h>

#include "bern/bernstein.hpp"
#include "bern/kernel_integrals.hpp"
#include "bern/norms.hpp"

static void BM_ISeries(benchmark::State& state) {
  double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bern::I_series(t, 0.9));
}
BENCHMARK(BM_ISeries)->Arg(4)->Arg(40)->Arg(160);

static void BM_Hardy2Series(benchmark::State& state) {
  auto f = bern::random_member(static_cast<int>(state.range(0)), 0.8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bern::hardy2_norm_series(f).value);
}
BENCHMARK(BM_Hardy2Series)->Arg(4)->Arg(16)->Arg(64);

static void BM_BergmanQuadrature(benchmark::State& state) {
  auto f = bern::random_member(8, 0.8, 2);
  auto w = bern::RadialWeight::power(1.0);
  bern::QuadratureSpec spec;
  spec.tolerance = 1e-9;
  for (auto _ : state)
    benchmark::DoNotOptimize(bern::bergman_norm(f, 2.0, w, spec).value);
}
BENCHMARK(BM_BergmanQuadrature);

static void BM_ConfluentOperatorNorm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(bern::h2_confluent_operator_norm(n, 0.5).value);
}
BENCHMARK(BM_ConfluentOperatorNorm)->Arg(8)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
