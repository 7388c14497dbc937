#include <benchmark/benchmark.h>

#include <vector>

#include "vacfield/cavity.hpp"
#include "vacfield/config.hpp"

using namespace vacfield;

namespace {

CavityDimensionless params(int n) {
    CavityConfig cfg;
    cfg.cutoff = ModeCount{n};
    cfg.sigma_over_L0 = 0.01;
    return derive_dimensionless(cfg);
}

void BM_TableBuild(benchmark::State& state) {
    const auto p = params(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cavity::InnerSumTable(p, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_TableBuild)->Args({100, 1})->Args({500, 1})->Args({500, 4})->Unit(benchmark::kMillisecond);

void BM_DeltaDensityTable(benchmark::State& state) {
    const auto p = params(static_cast<int>(state.range(0)));
    const cavity::InnerSumTable t(p);
    for (auto _ : state)
        benchmark::DoNotOptimize(cavity::delta_density(0.987, t));
}
BENCHMARK(BM_DeltaDensityTable)->Arg(100)->Arg(500);

void BM_DeltaDensityFast(benchmark::State& state) {
    const auto p = params(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cavity::delta_density_fast(0.987, p));
}
BENCHMARK(BM_DeltaDensityFast)->Arg(100)->Arg(500);

void BM_AveragedProfile(benchmark::State& state) {
    const auto p = params(500);
    const cavity::InnerSumTable t(p);
    const auto s = cavity::wall_excitation(p);
    std::vector<double> xs;
    for (int i = 0; i <= 120; ++i)
        xs.push_back(0.97 + 2.5e-4 * i);
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            cavity::sample_profile(xs, threads, [&](double x) { return cavity::averaged_density(x, t, s); }));
}
BENCHMARK(BM_AveragedProfile)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace
