// Serial reference vs OpenMP kernels. Arg(0) is serial, Arg(1) parallel.

#include "mtk/catalog.hpp"
#include "mtk/genfun.hpp"
#include "mtk/heuristics.hpp"
#include "mtk/oracles.hpp"
#include "mtk/triangulation.hpp"

#include <benchmark/benchmark.h>

using namespace mtk;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_DilationCount(benchmark::State& state) {
    Matroid m = complete_graph(4);
    for (auto _ : state) benchmark::DoNotOptimize(dilation_lattice_count(m, 8, mode(state)));
}
BENCHMARK(BM_DilationCount)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BrionAssembly(benchmark::State& state) {
    Matroid m = p6();
    for (auto _ : state) benchmark::DoNotOptimize(brion_genfun(m, mode(state)));
}
BENCHMARK(BM_BrionAssembly)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Specialization(benchmark::State& state) {
    auto terms = brion_genfun(p6());
    auto lambda = generic_lambda(terms);
    for (auto _ : state) benchmark::DoNotOptimize(ehrhart_from_terms(terms, lambda, 5, mode(state)));
}
BENCHMARK(BM_Specialization)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PivotTest(benchmark::State& state) {
    Matroid m = complete_graph(5);
    WeightMatrix w({{3, 1, 4, 1, 5, 9, 2, 6, 5, 3}, {5, 8, 9, 7, 9, 3, 2, 3, 8, 4}});
    BoundingBox box = bounding_box(m, w);
    std::vector<Point> targets;
    for (long long x = box.lo[0]; x <= box.hi[0]; x += 3)
        for (long long y = box.lo[1]; y <= box.hi[1]; y += 3) targets.push_back({x, y});
    SearchParams p;
    p.tries = 2;
    for (auto _ : state) benchmark::DoNotOptimize(pivot_test(m, w, targets, p, mode(state)));
}
BENCHMARK(BM_PivotTest)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PlacingVisibility(benchmark::State& state) {
    Matroid m = Matroid::uniform(6, 3);
    std::vector<IntVec> pts;
    for (const auto& b : enumerate_bases(m)) pts.push_back(incidence(b, m.size()));
    for (auto _ : state) benchmark::DoNotOptimize(placing_triangulation(pts, {}, mode(state)));
}
BENCHMARK(BM_PlacingVisibility)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
