#include <benchmark/benchmark.h>

#include "frobsieve/charsum.hpp"
#include "frobsieve/gl2count.hpp"

using namespace frobsieve;

static void BM_HistogramDirect(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(det_trace_histogram(static_cast<u64>(state.range(0))));
}
BENCHMARK(BM_HistogramDirect)->Arg(15)->Arg(35)->Unit(benchmark::kMillisecond);

static void BM_HistogramCrt(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(det_trace_histogram_crt(5, 7));
}
BENCHMARK(BM_HistogramCrt)->Unit(benchmark::kMillisecond);

static void BM_ClassRatio(benchmark::State& state) {
    i64 s = 0;
    for (auto _ : state) benchmark::DoNotOptimize(class_ratio(5, 7, 1, s++, 3));
}
BENCHMARK(BM_ClassRatio);

static void BM_TripleSumDirect(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(triple_sum_direct(static_cast<u64>(state.range(0)), 31));
}
BENCHMARK(BM_TripleSumDirect)->Arg(3)->Arg(13)->Arg(29)->Unit(benchmark::kMillisecond);

static void BM_TripleSumSquared(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(triple_sum_squared(29, 31));
}
BENCHMARK(BM_TripleSumSquared)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
