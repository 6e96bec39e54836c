#include <benchmark/benchmark.h>

#include "triamp/experiments.hpp"
#include "triamp/numkernel.hpp"
#include "triamp/scattering.hpp"
#include "triamp/stability.hpp"

namespace {

using namespace triamp;

SystemParams baseline() { return params_from_megahertz(default_params_mhz()); }

void BM_TransmissionMatrix(benchmark::State& state) {
    const auto p = baseline();
    double w = 0.0;
    for (auto _ : state) {
        auto t = transmission_matrix(p, w);
        benchmark::DoNotOptimize(t.matrix(1, 0));
        w += 1e-4;
    }
}
BENCHMARK(BM_TransmissionMatrix);

void BM_ClosedFormT21(benchmark::State& state) {
    const auto p = baseline();
    double w = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(t21_closed(p, w));
        w += 1e-4;
    }
}
BENCHMARK(BM_ClosedFormT21);

void BM_QuarticEigenvalues(benchmark::State& state) {
    const auto m = build_M(baseline());
    for (auto _ : state) {
        auto ev = quartic_eigenvalues(m);
        benchmark::DoNotOptimize(ev[0]);
    }
}
BENCHMARK(BM_QuarticEigenvalues);

void BM_StabilityGridRow(benchmark::State& state) {
    const auto p = baseline();
    const auto g1 = linspace(0.5, 5.0, 2);
    const auto g2 = linspace(0.0, 5.0, 251);
    for (auto _ : state) {
        auto grid = stability_grid(p, g1, g2, true);
        benchmark::DoNotOptimize(grid.verdicts.data());
    }
}
BENCHMARK(BM_StabilityGridRow);

} // namespace

BENCHMARK_MAIN();
