#include <benchmark/benchmark.h>

#include <cmath>

#include "edrep/quadrature.hpp"

using namespace edrep::quad;

static void BM_SemiInfiniteLorentzian(benchmark::State& state) {
    auto f = Integrand::algebraic_tail(
        [](double z) { return 1.0 / (z * z + 1.0); }, -2.0);
    for (auto _ : state) {
        auto r = integrate_semi_infinite(f, 1e-10);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_SemiInfiniteLorentzian);

static void BM_SemiInfiniteRational42(benchmark::State& state) {
    auto f = Integrand::algebraic_tail(
        [](double z) {
            return std::pow(z * z + 1.7, -4) * std::pow(z + 0.3, -2);
        },
        -10.0);
    for (auto _ : state) {
        auto r = integrate_semi_infinite(f, 1e-10);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_SemiInfiniteRational42);

static void BM_OscillatorySin(benchmark::State& state) {
    const double r = static_cast<double>(state.range(0));
    auto env = Integrand::smooth([](double k) { return std::exp(-k); });
    for (auto _ : state) {
        auto res = integrate_oscillatory(env, r, 1e-8);
        benchmark::DoNotOptimize(res.value);
    }
}
BENCHMARK(BM_OscillatorySin)->Arg(1)->Arg(10)->Arg(50);

static void BM_ClosedFormInm(benchmark::State& state) {
    double a = 0.1;
    for (auto _ : state) {
        a = (a < 9.0) ? a + 1e-3 : 0.1;
        benchmark::DoNotOptimize(closed_form_Inm(a, 0.5, 4, 2));
    }
}
BENCHMARK(BM_ClosedFormInm);
