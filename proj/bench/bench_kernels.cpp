#include <benchmark/benchmark.h>

#include "rootoid/corpus.hpp"
#include "rootoid/functor.hpp"
#include "rootoid/kernels.hpp"

using namespace rootoid;

static const System& d4() {
  static const System s = corpus_system("D4");
  return s;
}

static const System& a3() {
  static const System s = corpus_system("A3");
  return s;
}

static void BM_cocycle_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_violations_serial(d4().pr));
}
static void BM_cocycle_omp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_violations(d4().pr));
}

static void BM_squares_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(square_count_serial(d4().pr));
}
static void BM_squares_omp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(square_count(d4().pr));
}

static void BM_weak_order_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weak_order_matrix_serial(d4().pr, 0));
}
static void BM_weak_order_omp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(weak_order_matrix(d4().pr, 0));
}

static void BM_stable_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stable_sets_serial(a3().pr, 0));
}
static void BM_stable_omp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stable_sets(a3().pr, 0));
}

BENCHMARK(BM_cocycle_serial);
BENCHMARK(BM_cocycle_omp);
BENCHMARK(BM_squares_serial);
BENCHMARK(BM_squares_omp);
BENCHMARK(BM_weak_order_serial);
BENCHMARK(BM_weak_order_omp);
BENCHMARK(BM_stable_serial);
BENCHMARK(BM_stable_omp);

BENCHMARK_MAIN();
