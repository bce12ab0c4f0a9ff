#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sphereflow/symfun.hpp"

using namespace sphereflow;

namespace {

std::vector<double> cone_sample(int n) {
    std::mt19937_64 rng(99);
    std::vector<double> k(n);
    for (double& v : k) v = 0.2 + 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    return k;
}

void BM_elementary_symmetric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::vector<double> k = cone_sample(n);
    std::vector<double> sig(n + 1);
    for (auto _ : state) {
        elementary_symmetric(k, sig);
        benchmark::DoNotOptimize(sig.data());
    }
}
BENCHMARK(BM_elementary_symmetric)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_F_in_cone(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const std::vector<double> k = cone_sample(n);
    const auto spec = CurvatureFunctionSpec::power_root(2);
    for (auto _ : state) {
        const ConeEval e = F_in_cone(spec, k, n, 1e-10);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_F_in_cone)->Arg(2)->Arg(4)->Arg(8);

void BM_F_gradient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CurvatureVector k(cone_sample(n));
    const auto spec = CurvatureFunctionSpec::quotient(2);
    for (auto _ : state) {
        const FValueGradient g = F_value_and_gradient(spec, k);
        benchmark::DoNotOptimize(g.value);
    }
}
BENCHMARK(BM_F_gradient)->Arg(2)->Arg(4)->Arg(8);

}  // namespace
