#include <benchmark/benchmark.h>

#include "sphereflow/geometry.hpp"

using namespace sphereflow;

namespace {

void BM_geometry(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const AxisymProfile p = make_cosine_profile(2, N, GridMode::Axisym, 0.8, {{2, 0.05}});
    polar_weights(N, 1);  // prime the cache
    for (auto _ : state) {
        const GeometryFields f = geometry(p);
        benchmark::DoNotOptimize(f.u.data());
    }
}
BENCHMARK(BM_geometry)->Arg(100)->Arg(200)->Arg(400)->Arg(800);

void BM_integral_set(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const AxisymProfile p = make_cosine_profile(3, N, GridMode::Axisym, 0.8, {{2, 0.05}});
    const GeometryFields f = geometry(p);
    for (auto _ : state) {
        const IntegralSet s = integral_set(p, f);
        benchmark::DoNotOptimize(s.area);
    }
}
BENCHMARK(BM_integral_set)->Arg(100)->Arg(200)->Arg(400);

}  // namespace
