#include <benchmark/benchmark.h>

#include "frobsieve/config.hpp"
#include "frobsieve/sieve.hpp"
#include "frobsieve/verify.hpp"

using namespace frobsieve;

static void BM_SieveV2Random(benchmark::State& state) {
    const auto multisets = random_sieve_multisets(1, 1000, 1);
    const auto window = build_prime_window(static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sieve_bound_v2(multisets[0], window));
}
BENCHMARK(BM_SieveV2Random)->Arg(50)->Arg(200)->Arg(1000);

static void BM_SieveV2Curves(benchmark::State& state) {
    const auto [e1, e2] = demo_pair();
    const Multiset a = curve_pair_multiset(e1, e2, 100'000);
    const auto window = build_prime_window(100);
    for (auto _ : state) benchmark::DoNotOptimize(sieve_bound_v2(a, window));
}
BENCHMARK(BM_SieveV2Curves)->Unit(benchmark::kMillisecond);

static void BM_PrimeCharSum(benchmark::State& state) {
    const auto [e1, e2] = demo_pair();
    const MatchResult m = count_equal_fields(e1, e2, 100'000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prime_char_sum_direct(m, 3, 5));
        benchmark::DoNotOptimize(prime_char_sum_by_classes(chebotarev_empirical(m, 3, 5)));
    }
}
BENCHMARK(BM_PrimeCharSum)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
