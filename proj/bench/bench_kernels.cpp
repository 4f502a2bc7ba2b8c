// Parallel kernels against their serial references.
//
//   ./build/bench/mdk_bench --benchmark_filter=Mul
//   OMP_NUM_THREADS=4 ./build/bench/mdk_bench

#include <benchmark/benchmark.h>

#include <random>

#include "support.hpp"

namespace {

using mdk::FloatScalar;
using mdk::MDMatrix;

MDMatrix<FloatScalar> random_float(std::size_t n, std::size_t k, std::size_t max_offset, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto m = mdk::testing::random_md<FloatScalar>(n, k, [&] { return FloatScalar(u(rng), u(rng)); }, max_offset);
  // Keep it comfortably invertible for the inverse benchmarks.
  return mdk::add_identity(m, FloatScalar(4.0 * static_cast<double>(max_offset) + 2.0));
}

// args: n, k, bandwidth
void shapes(benchmark::internal::Benchmark* b) {
  for (auto n : {1000, 20000, 200000}) {
    b->Args({n, 1, 1});
    b->Args({n, 4, 3});
    b->Args({n, n / 50, 8});
  }
}

void BM_MulSerial(benchmark::State& state) {
  const auto a = random_float(state.range(0), state.range(1), state.range(2), 1);
  const auto b = random_float(state.range(0), state.range(1), state.range(2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(mdk::serial::mul(a, b));
}

void BM_MulParallel(benchmark::State& state) {
  const auto a = random_float(state.range(0), state.range(1), state.range(2), 1);
  const auto b = random_float(state.range(0), state.range(1), state.range(2), 2);
  for (auto _ : state) benchmark::DoNotOptimize(mdk::mul(a, b));
}

void BM_InvDense(benchmark::State& state) {
  const auto a = mdk::to_dense(random_float(state.range(0), state.range(1), 2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(mdk::reference::dense_inv(a));
}

void BM_InvGeneral(benchmark::State& state) {
  const auto a = random_float(state.range(0), state.range(1), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mdk::inv_general(a));
}

void BM_InvExactGeneral(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto a = mdk::add_identity(mdk::testing::random_exact_md(rng, state.range(0), state.range(1), 1),
                                   mdk::ExactScalar(20));
  for (auto _ : state) benchmark::DoNotOptimize(mdk::inv_general(a));
}

void BM_InvExactCayleyHamilton(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto a = mdk::add_identity(mdk::testing::random_exact_md(rng, state.range(0), state.range(1), 1),
                                   mdk::ExactScalar(20));
  for (auto _ : state) benchmark::DoNotOptimize(mdk::inv_cayley_hamilton(a));
}

}  // namespace

BENCHMARK(BM_MulSerial)->Apply(shapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MulParallel)->Apply(shapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_InvDense)->Args({120, 4})->Args({240, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvGeneral)->Args({120, 4})->Args({240, 8})->Args({4000, 40})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvExactGeneral)->Args({12, 3})->Args({24, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvExactCayleyHamilton)->Args({12, 3})->Args({24, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
