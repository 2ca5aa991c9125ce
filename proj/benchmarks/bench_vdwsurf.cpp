#include <benchmark/benchmark.h>

#include "vdwsurf/vdwsurf.hpp"

using namespace vdwsurf;

namespace {

const MediumModel kMedium = from_observables(2.71, 6.57, 1.0, 0.015);
const AtomSpec kAtomA = AtomSpec::excited(1.0, 1.0);
const AtomSpec kAtomB = AtomSpec::ground_from_alpha0(0.9, 1e-3, 1.0);
const PairGeometry kGeom = build_pair_geometry(0.1, Orientation::parallel, 1.0);

void BM_HalflineIntegral(benchmark::State& state) {
    for (auto _ : state) {
        double v = halfline_integral(
            [](double x) { return 1.0 / ((x * x + 0.09) * (x * x + 1.0)); });
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_HalflineIntegral);

void BM_ResonantRatioPoint(benchmark::State& state) {
    HostModel host = HostModel::vacuum();
    for (auto _ : state) {
        double v = u_resonant_ratio(kAtomB, kGeom, kMedium, host, 1.0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ResonantRatioPoint);

void BM_FullBreakdown(benchmark::State& state) {
    HostModel host = HostModel::vacuum();
    for (auto _ : state) {
        PotentialBreakdown u =
            u_ab_breakdown(kAtomA, kAtomB, kGeom, kMedium, host, 1.0);
        benchmark::DoNotOptimize(u.total);
    }
}
BENCHMARK(BM_FullBreakdown);

void BM_ResonantForce(benchmark::State& state) {
    for (auto _ : state) {
        ForceResult f = resonant_force(kAtomA, kAtomB, kGeom, kMedium, 1.0);
        benchmark::DoNotOptimize(f.F_z);
    }
}
BENCHMARK(BM_ResonantForce);

void BM_Figure2Sweep(benchmark::State& state) {
    Scenario s;
    s.points = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SweepResult r = figure_sweep(2, s);
        benchmark::DoNotOptimize(r.rows.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Figure2Sweep)->Arg(100)->Arg(600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
