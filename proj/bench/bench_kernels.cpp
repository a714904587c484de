// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include "lrm/graycode.hpp"
#include "lrm/kernels.hpp"

namespace {

using namespace lrm;

template <Execution E>
void legal_mask(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::legal_mask(t, n, E));
}

template <Execution E>
void ranking_image(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::ranking_image(t, n, E));
}

template <Execution E>
void longest_cycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = static_cast<Adjacency>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lrm::longest_cycle(n, 2, a, E));
}

}  // namespace

BENCHMARK(legal_mask<Execution::serial>)->Args({3, 10})->Args({4, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(legal_mask<Execution::parallel>)->Args({3, 10})->Args({4, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(ranking_image<Execution::serial>)->Args({3, 9})->Args({4, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(ranking_image<Execution::parallel>)->Args({3, 9})->Args({4, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(longest_cycle<Execution::serial>)->Args({8, 0})->Args({8, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(longest_cycle<Execution::parallel>)->Args({8, 0})->Args({8, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
