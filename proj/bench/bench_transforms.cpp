#include <benchmark/benchmark.h>

#include <omp.h>

#include "qqpft/qqpft.hpp"
#include "qqpft/reference.hpp"

using namespace qqpft;

namespace {

const QQPFTParams kParams{QPFTParams(1, 2, 1, 1, 1), QPFTParams(0.5, -1, 1, 0, 1)};

QSignal2D input(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  return sample_function(Grid2D::centered(n, 12.0), RandomSmoothSpec{1});
}

// Serial O(N^4) quadrature with kernels evaluated per term.
void BM_ReferenceDirect(benchmark::State& state) {
  const QSignal2D f = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(reference::forward_direct(f, kParams));
  state.SetComplexityN(state.range(0));
}

// Separable O(N^3) quadrature, parallel over lines.
void BM_Direct(benchmark::State& state) {
  const QSignal2D f = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(forward_direct(f, kParams));
  state.SetComplexityN(state.range(0));
}

void BM_DirectSerial(benchmark::State& state) {
  const QSignal2D f = input(state);
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  for (auto _ : state) benchmark::DoNotOptimize(forward_direct(f, kParams));
  omp_set_num_threads(threads);
  state.SetComplexityN(state.range(0));
}

// Chirp-FFT-chirp with a prebuilt plan.
void BM_Fast(benchmark::State& state) {
  const QSignal2D f = input(state);
  const QQPFTPlan plan(f.grid(), kParams);
  for (auto _ : state) benchmark::DoNotOptimize(plan.forward(f));
  state.SetComplexityN(state.range(0));
}

void BM_FastSerial(benchmark::State& state) {
  const QSignal2D f = input(state);
  const QQPFTPlan plan(f.grid(), kParams);
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  for (auto _ : state) benchmark::DoNotOptimize(plan.forward(f));
  omp_set_num_threads(threads);
  state.SetComplexityN(state.range(0));
}

void BM_FastWithPlanning(benchmark::State& state) {
  const QSignal2D f = input(state);
  for (auto _ : state) benchmark::DoNotOptimize(forward_fast(f, kParams));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_ReferenceDirect)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectSerial)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Direct)->RangeMultiplier(2)->Range(8, 128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FastSerial)->RangeMultiplier(2)->Range(8, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fast)->RangeMultiplier(2)->Range(8, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FastWithPlanning)->RangeMultiplier(2)->Range(8, 512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
