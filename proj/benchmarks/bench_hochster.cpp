#include <benchmark/benchmark.h>

#include "edgeres/betti.hpp"
#include "edgeres/families.hpp"
#include "edgeres/monomial.hpp"

using namespace edgeres;

static void BM_FamilyBetti(benchmark::State& state) {
    FamilySpec spec{FamilyKind::A3, static_cast<int>(state.range(0))};
    SimpleGraph g = complement(build_family(spec));
    HochsterOptions opt;
    opt.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(g, opt));
}
BENCHMARK(BM_FamilyBetti)->Arg(1)->Arg(2)->Arg(3);

static void BM_PowerRegularity(benchmark::State& state) {
    FamilySpec spec{FamilyKind::C, 1};
    MonomialIdeal ideal = edge_ideal(complement(build_family(spec)));
    MonomialIdeal square = ideal_power(ideal, 2);
    HochsterOptions opt;
    opt.nonlinear_only = true;
    opt.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(betti_of_monomial_ideal(square, opt));
}
BENCHMARK(BM_PowerRegularity);

static void BM_TaylorOracle(benchmark::State& state) {
    FamilySpec spec{FamilyKind::D2, 1};
    MonomialIdeal ideal = edge_ideal(complement(build_family(spec)));
    for (auto _ : state) benchmark::DoNotOptimize(betti_via_taylor(ideal, FieldSpec::rationals()));
}
BENCHMARK(BM_TaylorOracle);
