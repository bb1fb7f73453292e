// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "nestcount/gtree.hpp"
#include "nestcount/partition.hpp"
#include "nestcount/series.hpp"

using namespace nestcount;

static void BM_OracleSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_nonnesting(n, 2));
}
BENCHMARK(BM_OracleSerial)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_OracleParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_nonnesting_parallel(n, 2));
}
BENCHMARK(BM_OracleParallel)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_GtreeSerial(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gtree::sequence(m, 15, false));
}
BENCHMARK(BM_GtreeSerial)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_GtreeParallel(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gtree::sequence(m, 15, true));
}
BENCHMARK(BM_GtreeParallel)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_XEngine(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    series::XEngineOptions opts;
    opts.check_stabilization = false;
    opts.parallel = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(series::x_engine(m, 10, opts));
}
BENCHMARK(BM_XEngine)->Args({2, 0})->Args({2, 1})->Args({3, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);

static void BM_UEngine(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(series::u_engine(m, 12));
}
BENCHMARK(BM_UEngine)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

// Long m=2 runs, tracked for performance only. Target: N >= 40 well under ten minutes.
static void BM_LongRunM2(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const bool x = state.range(1) != 0;
    series::XEngineOptions opts;
    opts.check_stabilization = false;
    for (auto _ : state) {
        if (x)
            benchmark::DoNotOptimize(series::x_engine(2, N, opts));
        else
            benchmark::DoNotOptimize(series::u_engine(2, N));
    }
}
BENCHMARK(BM_LongRunM2)->Args({40, 0})->Args({40, 1})->Iterations(1)->Unit(benchmark::kSecond);

BENCHMARK_MAIN();
