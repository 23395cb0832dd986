#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "quartic/stats.hpp"

using namespace quartic;

namespace {

std::vector<double> normals(std::size_t n, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> z;
  std::vector<double> out(n);
  for (auto& x : out) x = z(gen);
  return out;
}

}  // namespace

static void bm_ks_two_sample(benchmark::State& state) {
  const auto a = normals(static_cast<std::size_t>(state.range(0)), 1);
  const auto b = normals(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ks_two_sample(a, b));
}
BENCHMARK(bm_ks_two_sample)->Arg(1000)->Arg(100000);

static void bm_ks_one_sample(benchmark::State& state) {
  const auto a = normals(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ks_one_sample_normal(a));
}
BENCHMARK(bm_ks_one_sample)->Arg(1000)->Arg(100000);
