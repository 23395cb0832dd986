#include <benchmark/benchmark.h>

#include "quartic/cov_table.hpp"
#include "quartic/simulate.hpp"

using namespace quartic;

static void bm_build_cov_matrix(benchmark::State& state) {
  const Grid g(state.range(0), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(build_cov_matrix(CovKernel::heat(), g));
}
BENCHMARK(bm_build_cov_matrix)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

static void bm_factorize_heat(benchmark::State& state) {
  const auto m = build_cov_matrix(CovKernel::heat(), Grid(state.range(0), 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(factorize(m));
}
BENCHMARK(bm_factorize_heat)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

static void bm_cov_audit(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(audit_cov_table(n, static_cast<std::size_t>(n)));
}
BENCHMARK(bm_cov_audit)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
