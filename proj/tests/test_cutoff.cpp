#include <cmath>
#include <random>

#include "doctest.h"
#include "edrep/cutoff.hpp"
#include "edrep/quadrature.hpp"

using namespace edrep;
using namespace edrep::cutoff;

namespace {

EnergyFunctional hydrogen_functional() {
    return EnergyFunctional(atomic::DensityProfile::hydrogen_1s());
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(std::fabs(y[i]));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

TEST_CASE("analytic cutoff: f(0) = 1 and the hydrogen z_k = 1 value") {
    auto fn = hydrogen_functional();
    auto f = analytic_cutoff(fn);
    CHECK(std::fabs(f(0.0) - 1.0) < 1e-15);
    // (1+1)^-2 (1 + 4/alpha)^-1 at k = 2/a
    const double expected = 0.25 / (1.0 + 4.0 * 137.035999);
    CHECK(f(2.0) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(f.small_k_slope == doctest::Approx(2.0 * 137.035999).epsilon(1e-12));
}

TEST_CASE("analytic cutoff: bounds and measured tail slope") {
    auto f = analytic_cutoff(hydrogen_functional());
    for (double k = 0.0; k <= 1e4; k = (k == 0.0 ? 1e-4 : k * 1.7)) {
        const double v = f(k);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    // hydrogen: n̂ ~ 16 k^-4 times the (s k)^-1 denominator
    std::vector<double> ks = log_spaced(1e3, 1e4, 9), vs(9);
    for (std::size_t i = 0; i < ks.size(); ++i) vs[i] = f(ks[i]);
    CHECK(fit_slope(ks, vs) == doctest::Approx(-5.0).epsilon(1e-3));
    CHECK(f.tail_power == -5.0);
}

TEST_CASE("stationarity: the optimality bracket vanishes node-wise") {
    auto fn = hydrogen_functional();
    auto f = analytic_cutoff(fn);
    const double s = fn.slope_coefficient();
    for (double k : log_spaced(1e-3, 1e4, 100)) {
        const double bracket = (fn.lambda_c() + s * fn.lambda_c() * k) * f(k) -
                               fn.lambda_c() * fn.form_factor()(k);
        CHECK(std::fabs(bracket) < 1e-10);
    }
}

TEST_CASE("energy shift: zero cutoff gives exactly zero") {
    auto fn = hydrogen_functional();
    CutoffFunction zero{[](double) { return 0.0; }, 0.0, -5.0};
    CHECK(energy_shift(fn, zero) == 0.0);
}

TEST_CASE("energy shift: hydrogen optimum, two routes agree and are negative") {
    auto fn = hydrogen_functional();
    auto f = analytic_cutoff(fn);
    const double e_fn = energy_shift(fn, f);
    const double e_red = energy_shift_reduced(fn);
    CHECK(e_red < 0.0);
    CHECK(std::fabs(e_fn - e_red) < 1e-8 * std::fabs(e_red));
    CHECK(e_red == doctest::Approx(-8.15365996132e-6).epsilon(1e-9));

    // closed-form reduction: shift = -(lc alpha/pi) [I_4(1) - B I_41(1,B)],
    // B = alpha/4, from k = 2z and the z-numerator identity
    const double a = fn.lambda_c();
    const double closed = -(a * a / 3.14159265358979323846) *
                          quad::closed_form_z_moment(1.0, a / 4.0, 4, 1);
    CHECK(std::fabs(e_red - closed) < 1e-8 * std::fabs(closed));
}

TEST_CASE("optimality: random perturbations raise the energy") {
    auto fn = hydrogen_functional();
    auto f = analytic_cutoff(fn);
    const double e_opt = energy_shift(fn, f);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> logeps(std::log(1e-3), std::log(1e-1));
    std::uniform_real_distribution<double> logk(std::log(1e-3), std::log(1e2));
    for (int i = 0; i < 20; ++i) {
        const double eps = std::exp(logeps(rng));
        const double k0 = std::exp(logk(rng));
        auto base = f.evaluator;
        CutoffFunction bumped{
            [base, eps, k0](double k) {
                const double u = std::log(k > 0 ? k / k0 : 1e-300);
                return base(k) + eps * std::exp(-0.5 * u * u);
            },
            f.small_k_slope, f.tail_power};
        CHECK(energy_shift(fn, bumped) > e_opt);
    }
}

TEST_CASE("grid minimisation matches the closed form on 400 log nodes") {
    auto fn = hydrogen_functional();
    auto f = analytic_cutoff(fn);
    const auto nodes = log_spaced(1e-3, 1e4, 400);
    const auto grid = minimize_on_grid(fn, nodes);
    double max_diff = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        max_diff = std::max(max_diff, std::fabs(grid.values[i] - f(nodes[i])));
    CHECK(max_diff < 1e-6);
}

TEST_CASE("grid minimisation: gaussian profile") {
    EnergyFunctional fn(atomic::DensityProfile::gaussian(1.0));
    auto f = analytic_cutoff(fn);
    const auto nodes = log_spaced(1e-3, 1e4, 400);
    const auto grid = minimize_on_grid(fn, nodes);
    double max_diff = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        max_diff = std::max(max_diff, std::fabs(grid.values[i] - f(nodes[i])));
    CHECK(max_diff < 1e-6);
}

TEST_CASE("grid minimisation: two nodes solve the scalar quadratic exactly") {
    auto fn = hydrogen_functional();
    const std::vector<double> nodes = {0.5, 2.0};
    const auto grid = minimize_on_grid(fn, nodes);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double k = nodes[i];
        const double expected = fn.lambda_c() * fn.form_factor()(k) /
                                (fn.lambda_c() + (2.0 / 3.0) * fn.d2() * k);
        CHECK(std::fabs(grid.values[i] - expected) < 1e-14);
    }
}

TEST_CASE("grid gradient matches central finite differences") {
    auto fn = hydrogen_functional();
    const auto nodes = log_spaced(0.5, 5.0, 16);
    std::vector<double> f(nodes.size());
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& v : f) v = u(rng);
    const auto g = grid_gradient(fn, nodes, f);
    std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
    for (int t = 0; t < 10; ++t) {
        const std::size_t i = pick(rng);
        const double h = 1e-4;
        auto fp = f, fm = f;
        fp[i] += h;
        fm[i] -= h;
        const double fd =
            (grid_energy(fn, nodes, fp) - grid_energy(fn, nodes, fm)) / (2.0 * h);
        CHECK(std::fabs(fd - g[i]) < 1e-6 * std::fabs(g[i]));
    }
}

TEST_CASE("grid minimisation: input validation") {
    auto fn = hydrogen_functional();
    std::vector<double> one = {1.0};
    CHECK_THROWS_AS(minimize_on_grid(fn, one), DomainError);
    std::vector<double> bad = {1.0, 0.5};
    CHECK_THROWS_AS(minimize_on_grid(fn, bad), DomainError);
}

TEST_CASE("C0: zero cutoff, hydrogen value, quadratic scaling") {
    auto fn = hydrogen_functional();
    const double lc = fn.lambda_c();
    CutoffFunction zero{[](double) { return 0.0; }, 0.0, -5.0};
    CHECK(induced_constant_C0(zero, lc) == 0.0);

    auto f = analytic_cutoff(fn);
    const double c0 = induced_constant_C0(f, lc);
    CHECK(c0 > 0.0);
    CHECK(c0 == doctest::Approx(1.36130378489e-7).epsilon(1e-8));
    // closed-form reduction through the z-moment family, z = k/2, B = alpha/4
    const double B = lc / 4.0;
    const double closed =
        lc / 3.14159265358979323846 * (lc * lc / 4.0) *
        quad::closed_form_z_moment(1.0, B, 4, 2);
    CHECK(std::fabs(c0 - closed) < 1e-8 * closed);

    auto half = f.evaluator;
    CutoffFunction scaled{[half](double k) { return 0.5 * half(k); },
                          f.small_k_slope, f.tail_power};
    CHECK(induced_constant_C0(scaled, lc) ==
          doctest::Approx(0.25 * c0).epsilon(1e-10));
}

TEST_CASE("Omega0: hydrogen value and closed-form reduction") {
    auto fn = hydrogen_functional();
    auto f = analytic_cutoff(fn);
    const double om = induced_frequency_Omega0(f);
    CHECK(om > 0.0);
    CHECK(om == doctest::Approx(0.00231192986959).epsilon(1e-8));
    // int k^2 f^2 dk = (alpha^2/2) [I_4 - 2B I_41 + B^2 I_42], B = alpha/4
    const double lc = fn.lambda_c();
    const double B = lc / 4.0;
    const double t2 =
        lc * lc / 2.0 *
        (quad::closed_form_In(1.0, 4) - 2.0 * B * quad::closed_form_Inm(1.0, B, 4, 1) +
         B * B * quad::closed_form_Inm(1.0, B, 4, 2));
    const double om_closed = std::sqrt(4.0 * t2 / (3.0 * 3.14159265358979323846));
    CHECK(std::fabs(om - om_closed) < 1e-8 * om_closed);

    CutoffFunction zero{[](double) { return 0.0; }, 0.0, -5.0};
    CHECK(induced_frequency_Omega0(zero) == 0.0);
}

TEST_CASE("Vpp: values, signs, and the large-r magnitude") {
    auto fn = hydrogen_functional();
    auto f = analytic_cutoff(fn);
    const double lc = fn.lambda_c();

    const double v0 = induced_potential_Vpp(f, lc, 0.0);
    CHECK(v0 < 0.0);
    CHECK(v0 == doctest::Approx(-2.626629906e-5).epsilon(1e-8));

    const double v100 = induced_potential_Vpp(f, lc, 100.0);
    CHECK(v100 == doctest::Approx(-1.6331106e-7).epsilon(1e-6));

    // |V''| r^2 approaches 2 e^2 lc/pi from below once r clears the
    // crossover scale 2/alpha; at r = 1000 a it is within 10%.
    const double v1000 = induced_potential_Vpp(f, lc, 1000.0);
    const double asym = 2.0 * lc / 3.14159265358979323846;
    CHECK(v1000 < 0.0);
    CHECK(std::fabs(v1000) * 1e6 / asym == doctest::Approx(0.90498035).epsilon(1e-5));
    CHECK(std::fabs(std::fabs(v1000) * 1e6 - asym) < 0.2 * asym);

    CutoffFunction zero{[](double) { return 0.0; }, 0.0, -5.0};
    for (double r : {0.0, 1.0, 50.0})
        CHECK(induced_potential_Vpp(zero, lc, r) == 0.0);
    CHECK_THROWS_AS(induced_potential_Vpp(f, lc, -1.0), DomainError);
}

TEST_CASE("free-electron localisation scan: negative shifts, slope -3") {
    const double alpha = 1.0 / 137.035999;
    std::vector<double> widths;
    for (int i = 0; i < 9; ++i)
        widths.push_back(10.0 * alpha * std::pow(100.0, i / 8.0));
    const auto scan = free_electron_localization_scan(widths);
    std::vector<double> w, e;
    for (const auto& [wi, ei] : scan) {
        CHECK(ei < 0.0);
        w.push_back(wi);
        e.push_back(ei);
    }
    const double slope = fit_slope(w, e);
    CHECK(std::fabs(slope + 3.0) < 0.1);

    // widest packet has the smallest |shift|
    CHECK(std::fabs(e.back()) < std::fabs(e.front()) * 1e-4);
}
