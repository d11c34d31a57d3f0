// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "permutiple/enumeration.hpp"
#include "permutiple/symmetry.hpp"

using namespace permutiple;

namespace {

void args(benchmark::internal::Benchmark* b) {
  b->Args({4, 10, 6})->Args({3, 7, 7})->Args({2, 5, 9})->Unit(benchmark::kMillisecond);
}

void BM_FindSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_permutiples_serial(
        static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
        static_cast<std::size_t>(state.range(2)), true));
  }
}

void BM_FindParallel(benchmark::State& state) {
  state.counters["threads"] = omp_get_max_threads();
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_permutiples(
        static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
        static_cast<std::size_t>(state.range(2)), true));
  }
}

void BM_OracleSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_oracle_serial(
        static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
        static_cast<std::size_t>(state.range(2)), true));
  }
}

void BM_OracleParallel(benchmark::State& state) {
  state.counters["threads"] = omp_get_max_threads();
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_oracle(
        static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
        static_cast<std::size_t>(state.range(2)), true));
  }
}

const PermutipleRecord& nine_digit() {
  static const auto r = *verify_equation(
      DigitString::from_msf(10, std::vector<int>{7, 2, 7, 1, 1, 9, 2, 8, 8}),
      DigitString::from_msf(10, std::vector<int>{1, 8, 1, 7, 7, 9, 8, 2, 2}), 4);
  return r;
}

void BM_ClassSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_class_members(nine_digit(), true, Execution::serial));
  }
}

void BM_ClassParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_class_members(nine_digit(), true, Execution::parallel));
  }
}

}  // namespace

BENCHMARK(BM_FindSerial)->Apply(args);
BENCHMARK(BM_FindParallel)->Apply(args);
BENCHMARK(BM_OracleSerial)->Apply(args);
BENCHMARK(BM_OracleParallel)->Apply(args);
BENCHMARK(BM_ClassSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
