#include <cmath>
#include <future>
#include <random>
#include <vector>

#include "doctest.h"
#include "edrep/quadrature.hpp"

using namespace edrep;
using namespace edrep::quad;

namespace {
constexpr double kPi = 3.14159265358979323846;

double rel_diff(double a, double b) {
    return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}
} // namespace

TEST_CASE("semi-infinite: Lorentzian tail gives pi/2") {
    auto f = Integrand::algebraic_tail(
        [](double z) { return 1.0 / (z * z + 1.0); }, -2.0);
    const auto r = integrate_semi_infinite(f, 1e-10);
    CHECK(std::fabs(r.value - kPi / 2.0) < 1e-10 * kPi / 2.0);
    CHECK(r.abs_error_estimate <= 1e-10 * std::fabs(r.value) + 1e-300);
    CHECK(r.evaluations > 0);
}

TEST_CASE("semi-infinite: zero integrand gives exactly zero") {
    auto f = Integrand::smooth([](double) { return 0.0; });
    const auto r = integrate_semi_infinite(f, 1e-10);
    CHECK(r.value == 0.0);
    CHECK(r.abs_error_estimate == 0.0);
}

TEST_CASE("semi-infinite: rational integrand matches hand reduction") {
    // int z (1+z^2)^-4 (z+1/4)^-1 dz = I_4(1) - (1/4) I_41(1, 1/4)
    auto f = Integrand::algebraic_tail(
        [](double z) { return z / std::pow(1.0 + z * z, 4) / (z + 0.25); },
        -8.0);
    const auto r = integrate_semi_infinite(f, 1e-11);
    const double reduced = closed_form_z_moment(1.0, 0.25, 4, 1);
    CHECK(rel_diff(r.value, reduced) < 1e-9);
    CHECK(rel_diff(r.value, 0.238276635769947) < 1e-9);
}

TEST_CASE("semi-infinite: non-finite sample aborts with a diagnostic") {
    auto f = Integrand::smooth([](double z) { return 1.0 / (z - 1.0); });
    CHECK_THROWS_AS(integrate_semi_infinite(f, 1e-10), NonFiniteSample);
}

TEST_CASE("semi-infinite: invalid tolerances rejected") {
    auto f = Integrand::smooth([](double) { return 0.0; });
    CHECK_THROWS_AS(integrate_semi_infinite(f, 0.0), DomainError);
    CHECK_THROWS_AS(integrate_semi_infinite(f, 1e-10, -1.0), DomainError);
}

TEST_CASE("semi-infinite: non-decaying oscillation exhausts the budget") {
    auto f = Integrand::smooth([](double z) { return std::sin(z); });
    CHECK_THROWS_AS(integrate_semi_infinite(f, 1e-12), NonConvergent);
}

TEST_CASE("oscillatory: incommensurate modulation never stabilises") {
    auto env = Integrand::smooth([](double k) { return std::sin(1.6180339887 * k); });
    CHECK_THROWS_AS(integrate_oscillatory(env, 1.0, 1e-12), NonConvergent);
}

TEST_CASE("oscillatory: exponential envelope against r/(1+r^2)") {
    for (double r : {0.1, 1.0, 10.0, 50.0}) {
        auto env = Integrand::smooth([](double k) { return std::exp(-k); });
        const auto res = integrate_oscillatory(env, r, 1e-8);
        const double exact = r / (1.0 + r * r);
        CHECK(std::fabs(res.value - exact) < 1e-8 * std::max(1.0, exact));
    }
}

TEST_CASE("oscillatory: zero envelope converges to exactly zero") {
    auto env = Integrand::smooth([](double) { return 0.0; });
    const auto res = integrate_oscillatory(env, 2.0, 1e-8);
    CHECK(res.value == 0.0);
}

TEST_CASE("oscillatory: frequency must be positive") {
    auto env = Integrand::smooth([](double k) { return std::exp(-k); });
    CHECK_THROWS_AS(integrate_oscillatory(env, 0.0, 1e-8), ZeroFrequency);
    CHECK_THROWS_AS(integrate_oscillatory(env, -1.0, 1e-8), ZeroFrequency);
}

TEST_CASE("oscillatory cosine: exponential envelope gives 1/(1+r^2)") {
    for (double r : {0.5, 2.0, 20.0}) {
        auto env = Integrand::smooth([](double k) { return std::exp(-k); });
        const auto res = integrate_oscillatory_cos(env, r, 1e-8);
        const double exact = 1.0 / (1.0 + r * r);
        CHECK(std::fabs(res.value - exact) < 1e-8 * std::max(1.0, exact));
    }
}

TEST_CASE("oscillatory: Abel values of non-decaying envelopes") {
    // int cos(kr) dk -> 0 and int k sin(kr) dk -> 0 for r > 0
    auto one = Integrand::smooth([](double) { return 1.0; });
    auto lin = Integrand::smooth([](double k) { return k; });
    for (double r : {1.0, 5.0}) {
        CHECK(std::fabs(integrate_oscillatory_cos(one, r, 1e-8).value) < 1e-10);
        CHECK(std::fabs(integrate_oscillatory(lin, r, 1e-8).value) < 1e-8);
        // int sin(kr) dk -> 1/r
        CHECK(std::fabs(integrate_oscillatory(one, r, 1e-8).value - 1.0 / r) <
              1e-8 / r);
    }
}

TEST_CASE("closed form I_n: base case and derivatives") {
    CHECK(rel_diff(closed_form_In(1.0, 1), kPi / 2.0) < 1e-15);
    CHECK(rel_diff(closed_form_In(1.0, 2), kPi / 4.0) < 1e-15);
    CHECK(rel_diff(closed_form_In(4.0, 1), kPi / 4.0) < 1e-15);
    CHECK(rel_diff(closed_form_In(1.0, 3), 3.0 * kPi / 16.0) < 1e-15);
    CHECK(rel_diff(closed_form_In(1.0, 4), 5.0 * kPi / 32.0) < 1e-15);
    CHECK_THROWS_AS(closed_form_In(-1.0, 1), DomainError);
    CHECK_THROWS_AS(closed_form_In(1.0, 0), DomainError);
}

TEST_CASE("closed form I_n: scaling law I_1(A) sqrt(A) = pi/2") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.01, 100.0);
    for (int i = 0; i < 50; ++i) {
        const double a = u(rng);
        CHECK(rel_diff(closed_form_In(a, 1) * std::sqrt(a), kPi / 2.0) < 1e-14);
    }
}

TEST_CASE("closed form I_n: monotone in A and in n") {
    for (int n = 1; n <= 4; ++n)
        for (double a : {1.0, 2.0, 5.0}) {
            CHECK(closed_form_In(a, n) > closed_form_In(a * 1.5, n));
            CHECK(closed_form_In(a, n) > closed_form_In(a, n + 1));
        }
}

TEST_CASE("closed form I_nm: base case") {
    CHECK(rel_diff(closed_form_Inm(1.0, 1.0, 1, 1), kPi / 4.0) < 1e-15);
    CHECK_THROWS_AS(closed_form_Inm(0.0, 1.0, 1, 1), DomainError);
    CHECK_THROWS_AS(closed_form_Inm(1.0, -1.0, 1, 1), DomainError);
    CHECK_THROWS_AS(closed_form_Inm(1.0, 1.0, 0, 1), DomainError);
    CHECK_THROWS_AS(closed_form_Inm(1.0, 1.0, 7, 1), DepthUnsupported);
    CHECK_THROWS_AS(closed_form_Inm(1.0, 1.0, 1, 5), DepthUnsupported);
}

TEST_CASE("closed form I_nm: frozen reference values") {
    CHECK(rel_diff(closed_form_Inm(1.0, 0.25, 4, 1), 1.01038886541383) < 1e-12);
    CHECK(rel_diff(closed_form_Inm(1.0, 0.25, 4, 2), 2.43262189737772) < 1e-12);
    CHECK(rel_diff(closed_form_Inm(2.0, 3.0, 1, 1), 0.234556682293694) < 1e-12);
}

TEST_CASE("closed form I_nm: oracle equivalence against quadrature") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double A = u(rng), B = u(rng);
        for (int n = 1; n <= 4; ++n)
            for (int m = 1; m <= 2; ++m) {
                auto f = Integrand::algebraic_tail(
                    [A, B, n, m](double z) {
                        return std::pow(z * z + A, -n) * std::pow(z + B, -m);
                    },
                    -(2.0 * n + m));
                const auto q = integrate_semi_infinite(f, 1e-11);
                const double cf = closed_form_Inm(A, B, n, m);
                CHECK(std::fabs(cf - q.value) <= 1e-9 * std::fabs(cf));
            }
    }
}

TEST_CASE("concurrent calls are bitwise deterministic") {
    auto worker = [] {
        std::vector<double> out;
        out.push_back(closed_form_Inm(2.5, 0.7, 4, 2));
        auto f = Integrand::algebraic_tail(
            [](double z) { return 1.0 / ((z * z + 2.0) * (z + 0.3)); }, -3.0);
        out.push_back(integrate_semi_infinite(f, 1e-11).value);
        auto env = Integrand::smooth([](double k) { return std::exp(-0.7 * k); });
        out.push_back(integrate_oscillatory(env, 3.0, 1e-9).value);
        return out;
    };
    std::vector<std::future<std::vector<double>>> futs;
    for (int i = 0; i < 4; ++i)
        futs.push_back(std::async(std::launch::async, worker));
    const auto ref = worker();
    for (auto& fut : futs) {
        const auto got = fut.get();
        REQUIRE(got.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(got[i] == ref[i]);
    }
}

TEST_CASE("closed form z moment: cross-checked against quadrature") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double A = u(rng), B = u(rng);
        for (int m : {1, 2}) {
            auto f = Integrand::algebraic_tail(
                [A, B, m](double z) {
                    return z * std::pow(z * z + A, -4) * std::pow(z + B, -m);
                },
                -(7.0 + m));
            const auto q = integrate_semi_infinite(f, 1e-11);
            const double cf = closed_form_z_moment(A, B, 4, m);
            CHECK(std::fabs(cf - q.value) <= 1e-9 * std::fabs(cf));
        }
    }
}
