#include <benchmark/benchmark.h>

#include "spcoh/oracle.hpp"

namespace {

// Args: theta, p, e, n.
void BM_OracleParallel(benchmark::State& state) {
  const auto theta = static_cast<int>(state.range(0));
  const auto p = static_cast<int>(state.range(1));
  const auto e = static_cast<int>(state.range(2));
  const auto n = static_cast<int>(state.range(3));
  for (auto _ : state) benchmark::DoNotOptimize(spcoh::oracle_counts(theta, p, e, n));
}

void BM_OracleReference(benchmark::State& state) {
  const auto theta = static_cast<int>(state.range(0));
  const auto p = static_cast<int>(state.range(1));
  const auto e = static_cast<int>(state.range(2));
  const auto n = static_cast<int>(state.range(3));
  for (auto _ : state) benchmark::DoNotOptimize(spcoh::oracle_counts_reference(theta, p, e, n));
}

void cases(benchmark::internal::Benchmark* b) {
  b->Args({2, 3, 1, 2})->Args({3, 2, 1, 1})->Args({3, 2, 1, 2})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_OracleParallel)->Apply(cases);
BENCHMARK(BM_OracleReference)->Apply(cases);

BENCHMARK_MAIN();
