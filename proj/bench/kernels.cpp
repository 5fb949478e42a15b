// Parallel kernels against their serial references.
//
//   modinv_bench --benchmark_filter=batched

#include <benchmark/benchmark.h>

#include "modinv/aggregate.hpp"
#include "modinv/common.hpp"
#include "modinv/pointset.hpp"
#include "modinv/reference.hpp"

namespace {

using namespace modinv;

const std::vector<aggregate::IntPair>& pairs() {
  static const auto grid = aggregate::signed_grid(4, 4);
  return grid;
}

void BM_batched_parallel(benchmark::State& state) {
  set_thread_count(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(aggregate::batched_sums(pairs(), 1, static_cast<u64>(state.range(0))));
  }
}

void BM_batched_dft(benchmark::State& state) {
  set_thread_count(static_cast<int>(state.range(1)));
  aggregate::Options o;
  o.backend = aggregate::Backend::dft;
  for (auto _ : state) {
    benchmark::DoNotOptimize(aggregate::batched_sums(pairs(), 1, static_cast<u64>(state.range(0)),
                                                     aggregate::Weight::unit, o));
  }
}

void BM_batched_reference(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::batched_sums(pairs(), 1, static_cast<u64>(state.range(0))));
  }
}

void BM_generate_parallel(benchmark::State& state) {
  set_thread_count(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(pointset::generate(static_cast<u64>(state.range(0))));
}

void BM_generate_reference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::generate(static_cast<u64>(state.range(0))));
}

void BM_weyl_parallel(benchmark::State& state) {
  set_thread_count(static_cast<int>(state.range(1)));
  const auto ps = pointset::generate(static_cast<u64>(state.range(0)));
  const auto freqs = aggregate::signed_grid(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pointset::weyl_sums(ps, freqs));
}

void BM_weyl_reference(benchmark::State& state) {
  const auto ps = pointset::generate(static_cast<u64>(state.range(0)));
  const auto freqs = aggregate::signed_grid(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(reference::weyl_sums(ps, freqs));
}

}  // namespace

BENCHMARK(BM_batched_parallel)->ArgsProduct({{1000, 4000}, {1, 4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_batched_dft)->ArgsProduct({{1000, 4000}, {1, 4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_batched_reference)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_generate_parallel)->ArgsProduct({{600, 2000}, {1, 4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_generate_reference)->Arg(600)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weyl_parallel)->ArgsProduct({{300, 600}, {1, 4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weyl_reference)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
