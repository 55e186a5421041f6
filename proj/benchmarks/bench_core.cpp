#include <benchmark/benchmark.h>

#include <numeric>

#include "mmp/flip_engine.hpp"
#include "mmp/rng.hpp"

using namespace mmp;

static void BM_Resolve(benchmark::State& state) {
    const long n = state.range(0);
    long q = n - 1;
    while (std::gcd(n, q) != 1) --q;
    CyclicQuotientType t = make_quotient(n, q);
    for (auto _ : state) {
        ResolutionChain rc = resolve(t);
        benchmark::DoNotOptimize(rc);
    }
}
BENCHMARK(BM_Resolve)->Arg(18)->Arg(97)->Arg(400);

static void BM_KDotC(benchmark::State& state) {
    PointOnCurve p1 = make_point_on_curve(make_quotient(169, 64), 1);  // (1,13,5)
    PointOnCurve p2 = make_point_on_curve(make_quotient(18, 5), 1);    // (2,3,1)
    CurveConfig cfg = make_case3_config({p1, p2});
    for (auto _ : state) {
        Rat k = k_dot_c(cfg);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_KDotC);

static void BM_ExclusionSweep(benchmark::State& state) {
    for (auto _ : state) {
        ExclusionReport rep = exclusion_sweep(state.range(0));
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_ExclusionSweep)->Arg(10)->Arg(50);

static void BM_RunSequence(benchmark::State& state) {
    std::vector<SimPoint> pts = {{13, 5, 3, true, 0}, {9, 2, 2, true, 0}};
    for (auto _ : state) {
        Trace t = run_sequence(make_flip_state(pts, 42), 10000);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_RunSequence);

BENCHMARK_MAIN();
