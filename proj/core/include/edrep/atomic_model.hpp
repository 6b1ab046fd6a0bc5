#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "edrep/errors.hpp"

namespace edrep::atomic {

enum class ProfileKind { hydrogen_1s, gaussian, tabulated };

// Isotropic ground-state electron density n(r) = |phi0(r)|^2 with unit
// total charge: 4 pi int r^2 n dr = 1 (checked to 1e-8 at construction,
// then renormalised exactly). Lengths in Bohr radii, density in a^-3.
class DensityProfile {
  public:
    static DensityProfile hydrogen_1s();
    static DensityProfile gaussian(double width);
    static DensityProfile tabulated(std::vector<std::pair<double, double>> samples);
    // CSV with header `r,density`; blank lines and `#` comments ignored.
    static DensityProfile from_csv(const std::string& path);

    ProfileKind kind() const { return kind_; }
    double gaussian_width() const;
    // Normalised density at radius r >= 0.
    double density(double r) const;
    // The raw normalisation integral found at construction.
    double normalization_check() const { return normalization_check_; }

    // Internals shared with the transform routines.
    struct Tabulated {
        std::vector<double> r, n, slope; // pchip data, already renormalised
        double flat_value = 0.0;         // density on [0, r.front())
        double tail_beta = 0.0;          // n(r) = n.back() exp(-beta (r - r.back()))
        bool tail_divergent = false;
        double eval(double r) const;
    };
    const Tabulated& tabulated_data() const;

  private:
    DensityProfile() = default;
    ProfileKind kind_ = ProfileKind::hydrogen_1s;
    double width_ = 1.0;
    double normalization_check_ = 1.0;
    Tabulated tab_;
};

// <d^2>/e^2 = 4 pi int r^4 n(r) dr, in units a^2.
// Hydrogen 1s gives 3, a Gaussian of width w gives 3 w^2 / 4.
double mean_square_dipole(const DensityProfile& profile);

// Fourier transform of the density, n̂(k) = 4 pi k^-1 int r n(r) sin(kr) dr,
// with n̂(0) = 1 handled analytically and a subtraction-safe route for the
// small-k curvature (1 - n̂(k))/k^2 -> <d^2>/(6 e^2).
struct FormFactor {
    std::function<double(double)> evaluator;
    std::function<double(double)> one_minus_over_k2;
    double small_k_curvature = 0.0; // <d^2>/(6 e^2)
    double tail_power = 0.0;        // algebraic decay power of n̂ (-inf if faster)

    double operator()(double k) const { return evaluator(k); }
};

FormFactor form_factor(const DensityProfile& profile);

// Direct radial quadrature of the transform; independent verification
// route for the closed-form evaluators.
double form_factor_by_quadrature(const DensityProfile& profile, double k,
                                 double rel_tol = 1e-12);

} // namespace edrep::atomic
