#pragma once

#include <functional>
#include <span>
#include <vector>

#include "edrep/atomic_model.hpp"
#include "edrep/units.hpp"

namespace edrep::cutoff {

// Momentum cutoff f̂(k) with its asymptotic metadata. For the variational
// optimum f̂(0) = 1 and 0 <= f̂ <= 1 whenever the form factor is
// non-negative.
struct CutoffFunction {
    std::function<double(double)> evaluator;
    double small_k_slope = 0.0; // 2 <d^2> / (3 e^2 lambda_c)
    double tail_power = 0.0;    // decay power of f̂; -inf if super-algebraic

    double operator()(double k) const { return evaluator(k); }
};

// The quadratic energy functional of the cutoff,
//   E[f̂] - E0 = (e^2/pi) { lc I[k f̂^2] + (2 <d^2>/3e^2) I[k^2 f̂^2]
//                          - 2 lc I[k n̂ f̂] },   I[..] = int_0^inf dk,
// fully determined by the density profile and the unit system.
class EnergyFunctional {
  public:
    EnergyFunctional(const atomic::DensityProfile& profile,
                     const UnitSystem& units = UnitSystem{},
                     double base_energy = 0.0);

    double d2() const { return d2_; }             // <d^2>/e^2 in a^2
    double lambda_c() const { return lambda_c_; } // = alpha
    double base_energy() const { return base_energy_; }
    const atomic::FormFactor& form_factor() const { return ff_; }
    // coefficient of k in the denominator of the optimum: 2 d2 / (3 lc)
    double slope_coefficient() const { return 2.0 * d2_ / (3.0 * lambda_c_); }

  private:
    atomic::FormFactor ff_;
    double d2_;
    double lambda_c_;
    double base_energy_;
};

// Discretised cutoff on a strictly increasing node set.
struct GridCutoff {
    std::vector<double> nodes;
    std::vector<double> values;
};

// Closed-form minimiser: f̂(k) = n̂(k) (1 + 2<d^2> k / (3 e^2 lc))^-1.
CutoffFunction analytic_cutoff(const EnergyFunctional& functional);

// E[f̂] - E0 for an arbitrary cutoff, by semi-infinite quadrature of the
// three functional terms. Zero cutoff gives exactly zero.
double energy_shift(const EnergyFunctional& functional,
                    const CutoffFunction& cutoff, double rel_tol = 1e-10);

// The reduced expression valid at the optimum:
//   -(e^2 lc / pi) int k n̂^2(k) (1 + 2<d^2> k/(3 e^2 lc))^-1 dk.
double energy_shift_reduced(const EnergyFunctional& functional,
                            double rel_tol = 1e-10);

// Numerical minimisation of the discretised functional, started from
// f̂ = 0 and iterated to gradient norm < grad_tol. Node weights come from
// the same [0,inf) -> [0,1) map as the quadrature, so the discrete
// minimiser refines onto the continuum one.
GridCutoff minimize_on_grid(const EnergyFunctional& functional,
                            std::span<const double> nodes,
                            double grad_tol = 1e-10);

// Quadrature weights used by minimize_on_grid (exposed for testing the
// discretised energy against the continuum one).
std::vector<double> grid_weights(std::span<const double> nodes);

// Discretised energy and gradient of the functional on a grid.
double grid_energy(const EnergyFunctional& functional,
                   std::span<const double> nodes,
                   std::span<const double> values);
std::vector<double> grid_gradient(const EnergyFunctional& functional,
                                  std::span<const double> nodes,
                                  std::span<const double> values);

// C0 = e^2 lc / pi * int k f̂^2 dk  (>= 0).
double induced_constant_C0(const CutoffFunction& cutoff, double lambda_c,
                           double rel_tol = 1e-10);

// Omega0 = sqrt( (4 e^2 / 3 pi m) int k^2 f̂^2 dk ).
double induced_frequency_Omega0(const CutoffFunction& cutoff,
                                double rel_tol = 1e-10);

// V''(r) = -(2 e^2 lc / pi r) int f̂(k) sin(kr) dk for r > 0;
// V''(0) = -(2 e^2 lc / pi) int k f̂(k) dk.
double induced_potential_Vpp(const CutoffFunction& cutoff, double lambda_c,
                             double r, double osc_rel_tol = 1e-8);

// Energy shift of a free Gaussian wave packet against its width, at the
// analytic optimum of each width. The fitted log-log slope approaches -3.
std::vector<std::pair<double, double>>
free_electron_localization_scan(std::span<const double> widths,
                                const UnitSystem& units = UnitSystem{});

// Log-spaced node helper used by the CLI and tests.
std::vector<double> log_spaced(double k_min, double k_max, int count);

} // namespace edrep::cutoff
