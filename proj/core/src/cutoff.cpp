#include "edrep/cutoff.hpp"

#include <cmath>
#include <limits>

#include "edrep/quadrature.hpp"

namespace edrep::cutoff {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

EnergyFunctional::EnergyFunctional(const atomic::DensityProfile& profile,
                                   const UnitSystem& units, double base_energy)
    : ff_(atomic::form_factor(profile)),
      d2_(atomic::mean_square_dipole(profile)),
      lambda_c_(units.compton_length()),
      base_energy_(base_energy) {
    if (!(d2_ > 0.0))
        throw DomainError("EnergyFunctional: <d^2> must be positive");
}

CutoffFunction analytic_cutoff(const EnergyFunctional& functional) {
    const double s = functional.slope_coefficient();
    auto n_hat = functional.form_factor().evaluator;
    CutoffFunction f;
    f.evaluator = [n_hat, s](double k) { return n_hat(k) / (1.0 + s * k); };
    f.small_k_slope = s;
    // f̂ inherits the form-factor decay times one extra power of k.
    f.tail_power = functional.form_factor().tail_power - 1.0;
    return f;
}

double energy_shift(const EnergyFunctional& functional,
                    const CutoffFunction& cutoff, double rel_tol) {
    const double lc = functional.lambda_c();
    const double d2 = functional.d2();
    auto f = cutoff.evaluator;
    auto n_hat = functional.form_factor().evaluator;

    auto sq = [f](double k) {
        const double v = f(k);
        return k * v * v;
    };
    auto sq_k2 = [f](double k) {
        const double v = f(k);
        return k * k * v * v;
    };
    auto cross = [f, n_hat](double k) { return k * n_hat(k) * f(k); };

    const auto t1 = quad::integrate_semi_infinite(
        quad::Integrand::algebraic_tail(sq, 2.0 * cutoff.tail_power + 1.0),
        rel_tol, 1e-300);
    const auto t2 = quad::integrate_semi_infinite(
        quad::Integrand::algebraic_tail(sq_k2, 2.0 * cutoff.tail_power + 2.0),
        rel_tol, 1e-300);
    const auto t3 = quad::integrate_semi_infinite(
        quad::Integrand::algebraic_tail(cross, cutoff.tail_power), rel_tol,
        1e-300);

    return (lc * t1.value + (2.0 / 3.0) * d2 * t2.value - 2.0 * lc * t3.value) /
           kPi;
}

double energy_shift_reduced(const EnergyFunctional& functional, double rel_tol) {
    const double lc = functional.lambda_c();
    const double s = functional.slope_coefficient();
    auto n_hat = functional.form_factor().evaluator;
    auto f = quad::Integrand::algebraic_tail(
        [n_hat, s](double k) {
            const double n = n_hat(k);
            return k * n * n / (1.0 + s * k);
        },
        2.0 * functional.form_factor().tail_power);
    const auto res = quad::integrate_semi_infinite(f, rel_tol, 1e-300);
    return -lc / kPi * res.value;
}

std::vector<double> grid_weights(std::span<const double> nodes) {
    // trapezoid in the compressed variable t = k/(1+k), mapped back with
    // dk/dt = (1+k)^2
    const std::size_t n = nodes.size();
    std::vector<double> t(n), w(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = nodes[i] / (1.0 + nodes[i]);
    for (std::size_t i = 0; i < n; ++i) {
        const double left = (i == 0) ? t[0] : t[i - 1];
        const double right = (i + 1 == n) ? t[n - 1] : t[i + 1];
        const double jac = (1.0 + nodes[i]) * (1.0 + nodes[i]);
        w[i] = 0.5 * (right - left) * jac;
    }
    return w;
}

namespace {

void check_nodes(std::span<const double> nodes) {
    if (nodes.size() < 2)
        throw DomainError("minimize_on_grid: need at least 2 nodes");
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (!(nodes[i] < nodes[i + 1]))
            throw DomainError("minimize_on_grid: nodes must be strictly increasing");
    if (!(nodes.front() > 0.0))
        throw DomainError("minimize_on_grid: nodes must be positive");
}

struct GridProblem {
    std::vector<double> w, q, b; // E = sum w (q f^2 - 2 b f) / pi
};

GridProblem assemble(const EnergyFunctional& functional,
                     std::span<const double> nodes) {
    GridProblem p;
    p.w = grid_weights(nodes);
    const double lc = functional.lambda_c();
    const double d2 = functional.d2();
    auto n_hat = functional.form_factor().evaluator;
    p.q.resize(nodes.size());
    p.b.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double k = nodes[i];
        p.q[i] = lc * k + (2.0 / 3.0) * d2 * k * k;
        p.b[i] = lc * k * n_hat(k);
    }
    return p;
}

} // namespace

double grid_energy(const EnergyFunctional& functional,
                   std::span<const double> nodes,
                   std::span<const double> values) {
    check_nodes(nodes);
    if (values.size() != nodes.size())
        throw DomainError("grid_energy: nodes/values size mismatch");
    GridProblem p = assemble(functional, nodes);
    double e = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        e += p.w[i] * (p.q[i] * values[i] * values[i] - 2.0 * p.b[i] * values[i]);
    return e / kPi;
}

std::vector<double> grid_gradient(const EnergyFunctional& functional,
                                  std::span<const double> nodes,
                                  std::span<const double> values) {
    check_nodes(nodes);
    if (values.size() != nodes.size())
        throw DomainError("grid_gradient: nodes/values size mismatch");
    GridProblem p = assemble(functional, nodes);
    std::vector<double> g(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        g[i] = 2.0 * p.w[i] * (p.q[i] * values[i] - p.b[i]) / kPi;
    return g;
}

GridCutoff minimize_on_grid(const EnergyFunctional& functional,
                            std::span<const double> nodes, double grad_tol) {
    check_nodes(nodes);
    GridProblem p = assemble(functional, nodes);
    const std::size_t n = nodes.size();

    // Steepest descent with exact line search, preconditioned by the
    // diagonal curvature. The raw functional is diagonal but spans ~20
    // decades of curvature across a log grid, where unscaled descent
    // stalls; the Jacobi scaling keeps the step exact and the path
    // generic for any quadratic energy.
    std::vector<double> f(n, 0.0), g(n), d(n);
    const int max_iter = 200;
    double gnorm = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < max_iter; ++iter) {
        gnorm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            g[i] = 2.0 * p.w[i] * (p.q[i] * f[i] - p.b[i]) / kPi;
            gnorm = std::max(gnorm, std::fabs(g[i]));
        }
        if (gnorm < grad_tol) break;
        double gd = 0.0, dhd = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            d[i] = -g[i] / (2.0 * p.w[i] * p.q[i] / kPi);
            gd += g[i] * d[i];
            dhd += d[i] * d[i] * 2.0 * p.w[i] * p.q[i] / kPi;
        }
        const double step = -gd / dhd;
        for (std::size_t i = 0; i < n; ++i) f[i] += step * d[i];
    }
    if (!(gnorm < grad_tol))
        throw NonConvergent("minimize_on_grid: gradient norm stalled above tolerance");

    GridCutoff out;
    out.nodes.assign(nodes.begin(), nodes.end());
    out.values = std::move(f);
    return out;
}

double induced_constant_C0(const CutoffFunction& cutoff, double lambda_c,
                           double rel_tol) {
    auto f = cutoff.evaluator;
    const auto res = quad::integrate_semi_infinite(
        quad::Integrand::algebraic_tail(
            [f](double k) {
                const double v = f(k);
                return k * v * v;
            },
            2.0 * cutoff.tail_power + 1.0),
        rel_tol, 1e-300);
    return lambda_c / kPi * res.value;
}

double induced_frequency_Omega0(const CutoffFunction& cutoff, double rel_tol) {
    if (!(cutoff.tail_power <= -1.5))
        throw DomainError("induced_frequency_Omega0: f̂ must decay faster than k^-3/2");
    auto f = cutoff.evaluator;
    const auto res = quad::integrate_semi_infinite(
        quad::Integrand::algebraic_tail(
            [f](double k) {
                const double v = f(k);
                return k * k * v * v;
            },
            2.0 * cutoff.tail_power + 2.0),
        rel_tol, 1e-300);
    return std::sqrt(4.0 * res.value / (3.0 * kPi));
}

double induced_potential_Vpp(const CutoffFunction& cutoff, double lambda_c,
                             double r, double osc_rel_tol) {
    if (r < 0.0) throw DomainError("induced_potential_Vpp: r must be >= 0");
    auto f = cutoff.evaluator;
    if (r == 0.0) {
        const auto res = quad::integrate_semi_infinite(
            quad::Integrand::algebraic_tail([f](double k) { return k * f(k); },
                                            cutoff.tail_power + 1.0),
            1e-10, 1e-300);
        return -2.0 / kPi * lambda_c * res.value;
    }
    const auto res = quad::integrate_oscillatory(
        quad::Integrand::smooth(f), r, osc_rel_tol);
    return -2.0 * lambda_c / (kPi * r) * res.value;
}

std::vector<std::pair<double, double>>
free_electron_localization_scan(std::span<const double> widths,
                                const UnitSystem& units) {
    std::vector<std::pair<double, double>> out;
    out.reserve(widths.size());
    for (double w : widths) {
        if (!(w > 0.0))
            throw DomainError("free_electron_localization_scan: widths must be positive");
        EnergyFunctional functional(atomic::DensityProfile::gaussian(w), units);
        out.emplace_back(w, energy_shift_reduced(functional));
    }
    return out;
}

std::vector<double> log_spaced(double k_min, double k_max, int count) {
    if (!(k_min > 0.0) || !(k_max > k_min) || count < 2)
        throw DomainError("log_spaced: need 0 < k_min < k_max and count >= 2");
    std::vector<double> k(count);
    const double la = std::log(k_min), lb = std::log(k_max);
    for (int i = 0; i < count; ++i)
        k[i] = std::exp(la + (lb - la) * i / (count - 1));
    k.front() = k_min;
    k.back() = k_max;
    return k;
}

} // namespace edrep::cutoff
