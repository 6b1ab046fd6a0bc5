#include "edrep/photons.hpp"

#include <cmath>

#include "edrep/quadrature.hpp"

namespace edrep::photons {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Golden-section maximisation on log k after a coarse bracket.
double peak_of(const std::function<double(double)>& density) {
    const double lo = std::log(1e-6), hi = std::log(1e2);
    const int coarse = 400;
    double best_l = lo, best_v = -1.0;
    for (int i = 0; i < coarse; ++i) {
        const double l = lo + (hi - lo) * i / (coarse - 1);
        const double v = density(std::exp(l));
        if (v > best_v) {
            best_v = v;
            best_l = l;
        }
    }
    if (best_v <= 0.0) return 0.0;
    double a = best_l - (hi - lo) / (coarse - 1);
    double b = best_l + (hi - lo) / (coarse - 1);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = density(std::exp(x1)), f2 = density(std::exp(x2));
    for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = density(std::exp(x2));
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = density(std::exp(x1));
        }
    }
    return std::exp(0.5 * (a + b));
}

} // namespace

PhotonSpectrum photon_spectrum(const cutoff::CutoffFunction& cutoff, double d2,
                               const UnitSystem& units, double rel_tol) {
    if (!(d2 > 0.0)) throw DomainError("photon_spectrum: d2 must be positive");
    auto f = cutoff.evaluator;
    const double pref = d2 / (3.0 * kPi * units.hbar_c());

    PhotonSpectrum s;
    s.density = [f, pref](double k) {
        const double v = f(k);
        return pref * k * v * v;
    };
    const auto total = quad::integrate_semi_infinite(
        quad::Integrand::algebraic_tail(s.density,
                                        2.0 * cutoff.tail_power + 1.0),
        rel_tol, 1e-300);
    s.total = total.value;
    s.peak_k = (s.total > 0.0) ? peak_of(s.density) : 0.0;
    return s;
}

double medium_photon_density(const MediumSpec& medium) {
    if (!(medium.number_density_cm3 > 0.0))
        throw DomainError("medium_photon_density: number density must be positive");
    return medium.number_density_cm3 * medium.per_atom_spectrum.total;
}

std::function<double(double)> frequency_distribution(
    const PhotonSpectrum& spectrum, const UnitSystem& units) {
    const double inv_c = units.alpha; // 1/c in internal units
    auto density = spectrum.density;
    return [density, inv_c](double omega) {
        return density(omega * inv_c) * inv_c;
    };
}

} // namespace edrep::photons
