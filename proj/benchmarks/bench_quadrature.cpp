#include <benchmark/benchmark.h>

#include "vacfield/boundary.hpp"
#include "vacfield/pointsource.hpp"

using namespace vacfield;

namespace {

void BM_ElectricDensity(benchmark::State& state) {
    const double r = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(pointsource::u_electric(r));
}
BENCHMARK(BM_ElectricDensity)->Arg(0)->Arg(1)->Arg(10000);

void BM_SelfEnergy(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pointsource::self_energy(pointsource::FieldKind::total));
}
BENCHMARK(BM_SelfEnergy)->Unit(benchmark::kMillisecond);

void BM_WallIntegral(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(boundary::integral_report(1e-10));
}
BENCHMARK(BM_WallIntegral)->Unit(benchmark::kMicrosecond);

void BM_BesselOracle(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(pointsource::bessel_oracle_electric(1.0));
}
BENCHMARK(BM_BesselOracle)->Unit(benchmark::kMillisecond)->Iterations(3);

} // namespace
BENCHMARK_MAIN();
