#include <benchmark/benchmark.h>

#include "finring/classify.hpp"
#include "finring/construct.hpp"
#include "finring/decide.hpp"
#include "finring/harness.hpp"
#include "finring/ideal.hpp"
#include "finring/ring.hpp"

using namespace finring;

// Construction cost for Z/n, dominated by table memoization below the memo cap.
static void BM_BuildZmod(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        Ring r = zmod(n);
        benchmark::DoNotOptimize(r);
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_BuildZmod)->Arg(16)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

static void BM_BuildProductTower(benchmark::State& state) {
    auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        Ring r = zmod(2);
        for (std::size_t i = 1; i < k; ++i) r = product(r, zmod(2));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BuildProductTower)->Arg(4)->Arg(6)->Arg(8);

static void BM_IdealGenerate(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Ring r = zmod(n);
    std::vector<Element> gens{r.element(2u % n), r.element(3u % n)};
    for (auto _ : state) {
        Ideal i = ideal_generate(r, gens);
        benchmark::DoNotOptimize(i.member_count());
    }
}
BENCHMARK(BM_IdealGenerate)->Arg(64)->Arg(512)->Arg(4096);

static void BM_AllIdeals(benchmark::State& state) {
    auto k = static_cast<std::size_t>(state.range(0));
    Ring r = zmod(2);
    for (std::size_t i = 1; i < k; ++i) r = product(r, zmod(2));
    for (auto _ : state) {
        auto lattice = all_ideals(r);
        benchmark::DoNotOptimize(lattice.size());
    }
    state.SetLabel("(Z/2)^" + std::to_string(k));
}
BENCHMARK(BM_AllIdeals)->Arg(3)->Arg(5)->Arg(7);

static void BM_DecideA(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Ring r = zmod(n);
    for (auto _ : state) {
        auto report = is_A_ring(r);
        benchmark::DoNotOptimize(report.verdict);
    }
}
BENCHMARK(BM_DecideA)->Arg(64)->Arg(360)->Arg(1024);

static void BM_DecideStrongA_Fast(benchmark::State& state) {
    Ring r = product(zmod(8), product(zmod(9), zmod(4)));
    for (auto _ : state) {
        auto report = is_strong_A_ring(r);
        benchmark::DoNotOptimize(report.verdict);
    }
}
BENCHMARK(BM_DecideStrongA_Fast);

static void BM_DecideStrongA_Oracle(benchmark::State& state) {
    Ring r = product(zmod(4), zmod(4));
    for (auto _ : state) {
        auto report = is_strong_A_ring(r, Method::oracle);
        benchmark::DoNotOptimize(report.verdict);
    }
}
BENCHMARK(BM_DecideStrongA_Oracle);

static void BM_Duplication(benchmark::State& state) {
    Ring r = zmod(static_cast<std::size_t>(state.range(0)));
    Ideal i = ideal_generate(r, {r.element(2)});
    for (auto _ : state) {
        Ring d = duplication(r, i);
        benchmark::DoNotOptimize(d.size());
    }
}
BENCHMARK(BM_Duplication)->Arg(8)->Arg(16)->Arg(32);

static void BM_CorpusGenerate(benchmark::State& state) {
    CorpusSpec spec;
    spec.max_size = static_cast<std::size_t>(state.range(0));
    spec.depth = 2;
    for (auto _ : state) {
        auto corpus = generate_corpus(spec);
        benchmark::DoNotOptimize(corpus.size());
    }
}
BENCHMARK(BM_CorpusGenerate)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
