#include <benchmark/benchmark.h>

#include "sphereflow/flow.hpp"

using namespace sphereflow;

namespace {

void BM_rk4_step(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const AxisymProfile p = make_cosine_profile(2, N, GridMode::Axisym, 0.8, {{2, 0.05}});
    FlowSpec spec;
    spec.family = FlowFamily::Contracting;
    spec.F = CurvatureFunctionSpec::mean();
    const double dt = cfl_dt(p, geometry(p), spec);
    for (auto _ : state) {
        const StepResult r = step(p, spec, dt);
        benchmark::DoNotOptimize(r.profile.rho.data());
    }
}
BENCHMARK(BM_rk4_step)->Arg(100)->Arg(200)->Arg(400);

void BM_speed(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const AxisymProfile p = make_cosine_profile(3, N, GridMode::Axisym, 0.8, {{2, 0.04}});
    const GeometryFields f = geometry(p);
    FlowSpec spec;
    spec.family = FlowFamily::Contracting;
    spec.F = CurvatureFunctionSpec::power_root(2);
    spec.requiredCone = 3;
    for (auto _ : state) {
        const SpeedResult r = try_speed(p, f, spec);
        benchmark::DoNotOptimize(r.values.data());
    }
}
BENCHMARK(BM_speed)->Arg(100)->Arg(200)->Arg(400);

}  // namespace
