#include <benchmark/benchmark.h>

#include <random>

#include "edgeres/graph.hpp"

using namespace edgeres;

static SimpleGraph random_graph(unsigned seed, int n) {
    std::mt19937 rng(seed);
    SimpleGraph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng() % 2) g.add_edge(u, v);
    return g;
}

static void BM_CanonicalForm(benchmark::State& state) {
    SimpleGraph g = random_graph(42, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(7)->Arg(8)->Arg(9);

static void BM_InducedCycles(benchmark::State& state) {
    SimpleGraph g = random_graph(7, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_induced_cycles(g, 4));
}
BENCHMARK(BM_InducedCycles)->Arg(10)->Arg(14);

static void BM_Chordality(benchmark::State& state) {
    SimpleGraph g = random_graph(9, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_chordal(g));
}
BENCHMARK(BM_Chordality)->Arg(16)->Arg(22);

BENCHMARK_MAIN();
