#include <benchmark/benchmark.h>

#include "ranklevel/quot.hpp"
#include "ranklevel/schur.hpp"
#include "ranklevel/subsets.hpp"
#include "ranklevel/verlinde.hpp"

using namespace ranklevel;

static void BM_SubsetEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        for_each_subset(n, n / 2, [&](const std::vector<int>& s) { count += s.front(); });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_SubsetEnumeration)->Arg(12)->Arg(16)->Arg(20);

static void BM_CycloMul(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    CycloNum a = zeta_pow(N, 1) + CycloNum(N, Rat(3, 7));
    CycloNum b = zeta_pow(N, N - 2) - CycloNum(N, Rat(5, 2));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul)->Arg(7)->Arg(12)->Arg(24);

static void BM_CycloInverse(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    CycloNum a = zeta_pow(N, 1) + CycloNum(N, Rat(3));
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycloInverse)->Arg(7)->Arg(12)->Arg(24);

static void BM_SchurDeterminant(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const int r = N / 2;
    auto diagrams = all_diagrams(r, N - r);
    const YoungDiagram& d = diagrams[diagrams.size() / 2];
    std::vector<int> exps;
    for (int i = 0; i < r; ++i) exps.push_back(i);
    EvalPoint pts{N, exps};
    for (auto _ : state) benchmark::DoNotOptimize(schur_eval(d, pts));
}
BENCHMARK(BM_SchurDeterminant)->Arg(6)->Arg(8)->Arg(10);

static void BM_VerlindeTwisted(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const int r = N / 2;
    WeightSystem w(r, N - r);
    for (auto _ : state) {
        VerlindeInstance inst(r, N - r, 2, w);
        benchmark::DoNotOptimize(verlinde_twisted(inst));
    }
}
BENCHMARK(BM_VerlindeTwisted)->Arg(6)->Arg(8)->Arg(10);

static void BM_LrCoefficient(benchmark::State& state) {
    YoungDiagram a({2, 1}, 3, 3), t({3, 2, 1}, 3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(a, a, t));
}
BENCHMARK(BM_LrCoefficient);

BENCHMARK_MAIN();
