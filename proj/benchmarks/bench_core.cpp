#include <steinerhat/envelope.hpp>
#include <steinerhat/hat.hpp>
#include <steinerhat/loci.hpp>
#include <steinerhat/tangency.hpp>
#include <steinerhat/triads.hpp>
#include <steinerhat/triangle_centers.hpp>

#include <benchmark/benchmark.h>

using namespace steinerhat;

namespace {

const Ellipse kEllipse(2.0, 1.0);

void BM_DeltoidPoint(benchmark::State& state) {
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(deltoid_point(kEllipse, BoundaryParam(0.8), t));
        t += 1e-3;
    }
}
BENCHMARK(BM_DeltoidPoint);

void BM_EnvelopeOracle(benchmark::State& state) {
    const Pole pole = Pole::boundary(kEllipse, BoundaryParam(0.8));
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(npc_envelope_numeric(kEllipse, pole, t, 1e-5));
        t += 1e-3;
    }
}
BENCHMARK(BM_EnvelopeOracle);

void BM_HatFrame(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_hat_frame(kEllipse, BoundaryParam(0.8)));
}
BENCHMARK(BM_HatFrame);

void BM_HatAreaShoelace(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hat_area_numeric(kEllipse, BoundaryParam(0.8), n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HatAreaShoelace)->RangeMultiplier(10)->Range(1000, 100000)->Complexity(benchmark::oN);

void BM_TriangleCenter(benchmark::State& state) {
    const Triangle t = preimage_triangle(build_hat_frame(kEllipse, BoundaryParam(0.8)));
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(triangle_center(t, k));
}
BENCHMARK(BM_TriangleCenter)->Arg(4)->Arg(99)->Arg(671);

void BM_Perspector(benchmark::State& state) {
    const HatFrame f = build_hat_frame(kEllipse, BoundaryParam(0.8));
    const Triangle t = preimage_triangle(f), tp = cusp_triangle(f);
    for (auto _ : state) benchmark::DoNotOptimize(perspector(t, tp));
}
BENCHMARK(BM_Perspector);

void BM_CoincidenceTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(coincidence_table_check(kEllipse, BoundaryParam(0.8)));
}
BENCHMARK(BM_CoincidenceTable);

void BM_TangencyReport(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hat_ellipse_intersections(kEllipse, BoundaryParam(0.8)));
}
BENCHMARK(BM_TangencyReport);

void BM_CuspCrossings(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(solve_cusp_crossings(kEllipse, 0.0, 3.0 * kTwoPi));
}
BENCHMARK(BM_CuspCrossings)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
