#include <benchmark/benchmark.h>

#include "quartic/rng.hpp"
#include "quartic/simulate.hpp"

using namespace quartic;

static void bm_normal_stream(benchmark::State& state) {
  NormalStream s(1);
  for (auto _ : state) benchmark::DoNotOptimize(s.next());
}
BENCHMARK(bm_normal_stream);

static void bm_sample_paths(benchmark::State& state) {
  const Grid g(state.range(0), 1.0);
  const auto f = factorize(CovKernel::heat(), g);
  const auto M = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sample_paths(f, g, M, 7));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(bm_sample_paths)->Args({1024, 200})->Args({4096, 200})->Unit(benchmark::kMillisecond);
