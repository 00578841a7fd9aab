#include <benchmark/benchmark.h>

#include "nvsim/cumulant.hpp"
#include "nvsim/fano.hpp"
#include "nvsim/lamb_shift.hpp"
#include "nvsim/spectrum.hpp"

namespace {

nvsim::SystemParams fig_params() {
    nvsim::SystemParamsInput in;
    in.quality = 1e6;
    in.g_hz = 1.0;
    in.spin_count = 1e20;
    in.pump_hz = 25.0;
    return in.resolve();
}

void BM_density_eval(benchmark::State& state) {
    const auto d = fig_params().spectral_density();
    double f = 3e9 + 1e5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(d(f));
        f += 1.0;
    }
}
BENCHMARK(BM_density_eval);

void BM_lamb_shift_closed(benchmark::State& state) {
    const auto d = fig_params().spectral_density();
    double f = 3e9 + 1e5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nvsim::lamb_shift(d, f));
        f += 1.0;
    }
}
BENCHMARK(BM_lamb_shift_closed);

void BM_lamb_shift_quadrature(benchmark::State& state) {
    const auto d = fig_params().spectral_density();
    for (auto _ : state) {
        benchmark::DoNotOptimize(nvsim::lamb_shift_pv(d, 3e9 + 1.3e6));
    }
}
BENCHMARK(BM_lamb_shift_quadrature);

void BM_cavity_transmission(benchmark::State& state) {
    const nvsim::DressedSpectrumModel model(fig_params());
    double f = 3e9 + 1e6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.cavity_amplitude(f));
        f += 10.0;
    }
}
BENCHMARK(BM_cavity_transmission);

void BM_odmr_intensity(benchmark::State& state) {
    const nvsim::DressedSpectrumModel model(fig_params());
    double f = 3e9 + 1e6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.odmr_intensity(f));
        f += 10.0;
    }
}
BENCHMARK(BM_odmr_intensity);

void BM_integrate_short(benchmark::State& state) {
    const auto p = fig_params();
    const auto init = nvsim::thermal_initial_state(p);
    nvsim::SamplingGrid grid{1e-3, 50};
    for (auto _ : state) {
        benchmark::DoNotOptimize(nvsim::integrate(init, p, grid));
    }
}
BENCHMARK(BM_integrate_short)->Unit(benchmark::kMillisecond);

void BM_mit_linewidth(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(nvsim::mit_linewidth(1625.0, 3000.0, 2.0));
    }
}
BENCHMARK(BM_mit_linewidth);

}  // namespace

BENCHMARK_MAIN();
