#include <benchmark/benchmark.h>

#include "frobsieve/config.hpp"
#include "frobsieve/frobenius.hpp"

using namespace frobsieve;

namespace {

u64 prime_near(u64 n) {
    while (!is_prime(n)) ++n;
    return n;
}

void BM_ApNaive(benchmark::State& state) {
    const CurveQ e(2, 3);
    const u64 p = prime_near(static_cast<u64>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ap_naive(e, p));
}
BENCHMARK(BM_ApNaive)->RangeMultiplier(10)->Range(1000, 1'000'000);

void BM_ApBsgs(benchmark::State& state) {
    const CurveQ e(2, 3);
    const u64 p = prime_near(static_cast<u64>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ap_bsgs(e, p));
}
BENCHMARK(BM_ApBsgs)->RangeMultiplier(10)->Range(1000, 1'000'000'000);

void BM_ComputeTraces(benchmark::State& state) {
    const CurveQ e(1, 1);
    TraceOptions options;
    options.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(compute_traces(e, static_cast<u64>(state.range(0)), options));
}
BENCHMARK(BM_ComputeTraces)->Args({100'000, 1})->Args({100'000, 4})->Unit(benchmark::kMillisecond);

void BM_EqualFields(benchmark::State& state) {
    const auto [e1, e2] = demo_pair();
    for (auto _ : state) benchmark::DoNotOptimize(count_equal_fields(e1, e2, static_cast<u64>(state.range(0))));
}
BENCHMARK(BM_EqualFields)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
