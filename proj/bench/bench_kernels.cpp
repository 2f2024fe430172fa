// Serial reference vs OpenMP kernels and search walks.
#include <benchmark/benchmark.h>

#include "hamsup/checks.hpp"
#include "hamsup/kernels.hpp"
#include "hamsup/search.hpp"

using namespace hamsup;

namespace {

std::vector<Integer> random_values(HammingShape shape) {
  Rng rng(1);
  return kernels::to_integer_form(random_integer_function(shape, rng, 100)).num;
}

void BM_DistanceSumsParallel(benchmark::State& state) {
  const HammingShape shape{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  const auto values = random_values(shape);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::distance_class_sums(shape, values));
}

void BM_DistanceSumsSerial(benchmark::State& state) {
  const HammingShape shape{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  const auto values = random_values(shape);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::distance_class_sums(shape, values));
}

void BM_AdjacencyParallel(benchmark::State& state) {
  const HammingShape shape{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  const auto values = random_values(shape);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::adjacency_sums(shape, values));
}

void BM_AdjacencySerial(benchmark::State& state) {
  const HammingShape shape{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  const auto values = random_values(shape);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::adjacency_sums(shape, values));
}

template <Execution E>
void BM_Search(benchmark::State& state) {
  SearchBudget budget;
  budget.symmetry_pruning = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exists_with_support_at_most(2, 5, {1, 1}, 7, budget, E));
  }
  state.counters["threads"] = kernels::max_threads();
}

}  // namespace

BENCHMARK(BM_DistanceSumsParallel)->Args({3, 4})->Args({4, 5})->Args({5, 4});
BENCHMARK(BM_DistanceSumsSerial)->Args({3, 4})->Args({4, 5})->Args({5, 4});
BENCHMARK(BM_AdjacencyParallel)->Args({4, 5})->Args({6, 4});
BENCHMARK(BM_AdjacencySerial)->Args({4, 5})->Args({6, 4});
BENCHMARK(BM_Search<Execution::Parallel>)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Search<Execution::Serial>)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
