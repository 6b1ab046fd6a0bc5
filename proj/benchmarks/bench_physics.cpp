#include <benchmark/benchmark.h>

#include "edrep/cutoff.hpp"
#include "edrep/interactions.hpp"
#include "edrep/photons.hpp"

using namespace edrep;

namespace {

const cutoff::EnergyFunctional& hydrogen() {
    static const cutoff::EnergyFunctional fn(
        atomic::DensityProfile::hydrogen_1s());
    return fn;
}

} // namespace

static void BM_MinimizeOnGrid(benchmark::State& state) {
    const auto nodes =
        cutoff::log_spaced(1e-3, 1e4, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto grid = cutoff::minimize_on_grid(hydrogen(), nodes);
        benchmark::DoNotOptimize(grid.values.back());
    }
}
BENCHMARK(BM_MinimizeOnGrid)->Arg(100)->Arg(400)->Arg(1600);

static void BM_EnergyShift(benchmark::State& state) {
    const auto f = cutoff::analytic_cutoff(hydrogen());
    for (auto _ : state) {
        benchmark::DoNotOptimize(cutoff::energy_shift(hydrogen(), f));
    }
}
BENCHMARK(BM_EnergyShift);

static void BM_PhotonSpectrum(benchmark::State& state) {
    const auto f = cutoff::analytic_cutoff(hydrogen());
    for (auto _ : state) {
        auto s = photons::photon_spectrum(f, hydrogen().d2());
        benchmark::DoNotOptimize(s.total);
    }
}
BENCHMARK(BM_PhotonSpectrum);

static void BM_GammaExact(benchmark::State& state) {
    const auto f = cutoff::analytic_cutoff(hydrogen());
    const double R = static_cast<double>(state.range(0));
    for (auto _ : state) {
        auto t = interactions::gamma_tensor_exact(f, {0.0, 0.0, R}, 1e-8);
        benchmark::DoNotOptimize(t.matrix(2, 2));
    }
}
BENCHMARK(BM_GammaExact)->Arg(50)->Arg(500)->Arg(5000);

static void BM_InducedPotential(benchmark::State& state) {
    const auto f = cutoff::analytic_cutoff(hydrogen());
    const double r = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            cutoff::induced_potential_Vpp(f, hydrogen().lambda_c(), r));
    }
}
BENCHMARK(BM_InducedPotential)->Arg(10)->Arg(100)->Arg(1000);
