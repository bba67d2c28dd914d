#include <benchmark/benchmark.h>

#include "permfact/characters.hpp"
#include "permfact/nu.hpp"
#include "permfact/oracle.hpp"
#include "permfact/separation.hpp"
#include "permfact/symfunc.hpp"

using namespace permfact;

static void BM_HookCharacterRow(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int i = 0; i < n; ++i)
            for (const Partition& mu : partitions_of(n))
                benchmark::DoNotOptimize(hook_character(HookIndex{n, i}, mu));
}
BENCHMARK(BM_HookCharacterRow)->Arg(8)->Arg(12)->Arg(16);

static void BM_NuInductiveSweep(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (const Partition& lambda : partitions_of(n))
            for (int a = 1; a <= 4 && a < n; ++a)
                benchmark::DoNotOptimize(nu_inductive(a, lambda));
}
BENCHMARK(BM_NuInductiveSweep)->Arg(10)->Arg(14);

static void BM_ClassEnumeration(benchmark::State& state) {
    Partition lambda({4, 2, 1});
    for (auto _ : state) {
        long count = 0;
        enumerate_class(lambda, [&](const Permutation&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_ClassEnumeration);

static void BM_TripleCounts(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int threads = static_cast<int>(state.range(1));
    Partition lambda({n}), mu({n - 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(triple_counts(lambda, mu, threads));
}
BENCHMARK(BM_TripleCounts)->Args({6, 1})->Args({7, 1})->Args({7, 4});

static void BM_SeparationRatio(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int threads = static_cast<int>(state.range(1));
    Partition lambda({n});
    Composition I({1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(separation_ratio(
            lambda, lambda, I, SeparationMode::standard, threads));
}
BENCHMARK(BM_SeparationRatio)->Args({6, 1})->Args({7, 1})->Args({7, 4});

static void BM_ProductRecurrence(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Composition I({2, 1, 1});
    for (auto _ : state)
        for (int a = 0; a <= 3; ++a)
            benchmark::DoNotOptimize(
                p_product(n, a, I, ProductMethod::recurrence));
}
BENCHMARK(BM_ProductRecurrence)->Arg(10)->Arg(20);

static void BM_SymfuncClosed(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int a = 0; a < n; ++a)
            benchmark::DoNotOptimize(f_a_closed(n, a));
}
BENCHMARK(BM_SymfuncClosed)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
