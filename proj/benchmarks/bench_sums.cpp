#include <benchmark/benchmark.h>

#include "quartic/sums.hpp"

using namespace quartic;

namespace {

PathEnsemble one_path(std::int64_t n) {
  const Grid g(n, 1.0);
  return sample_paths(factorize(CovKernel::heat(), g), g, 1, 3);
}

}  // namespace

static void bm_midpoint_sum(benchmark::State& state) {
  const auto e = one_path(state.range(0));
  const auto g = builtin("sine");
  for (auto _ : state) benchmark::DoNotOptimize(midpoint_sum(e.path(0), *g, 1));
}
BENCHMARK(bm_midpoint_sum)->Arg(4096);

static void bm_power_sum(benchmark::State& state) {
  const auto e = one_path(state.range(0));
  const auto g = builtin("const");
  for (auto _ : state) benchmark::DoNotOptimize(power_sum(e.path(0), *g, 0, 4, Parity::All, EvalPoint::Left));
}
BENCHMARK(bm_power_sum)->Arg(4096);

static void bm_bn_smoothed(benchmark::State& state) {
  const auto e = one_path(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bn_smoothed(e.path(0)));
}
BENCHMARK(bm_bn_smoothed)->Arg(4096);
