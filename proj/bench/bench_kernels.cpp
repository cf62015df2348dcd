// Serial reference against the OpenMP path for the enumeration kernels.
#include <benchmark/benchmark.h>

#include "groth/factor.hpp"
#include "groth/stable.hpp"
#include "groth/tableau.hpp"

using namespace groth;

static Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

static void BM_CircledBounded(benchmark::State& state) {
    const auto w = Permutation::longest(4);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_circled_bounded(w, 12, exec_of(state)));
}
BENCHMARK(BM_CircledBounded)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_HookFactorizations(benchmark::State& state) {
    const Permutation w({2, 3, 1, 5, 4});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_hook(w, 3, 5, exec_of(state)));
}
BENCHMARK(BM_HookFactorizations)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_GenfunSVT(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(genfun_svt({{3, 2, 1}, {}}, 4, 9, exec_of(state)));
}
BENCHMARK(BM_GenfunSVT)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_GenfunPSMT(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(genfun_psmt({2, 1}, 3, 5, exec_of(state)));
}
BENCHMARK(BM_GenfunPSMT)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_TableauSum(benchmark::State& state) {
    const Permutation w({3, 2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(stable_double_via_tableaux(w, {3, 5}, exec_of(state)));
}
BENCHMARK(BM_TableauSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
