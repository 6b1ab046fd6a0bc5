#pragma once

#include <string>
#include <vector>

#include "edrep/cutoff.hpp"
#include "edrep/geometry.hpp"

namespace edrep::interactions {

// 3x3 symmetric dipole-coupling matrix at a given separation (Bohr radii).
struct InteractionTensor {
    Vec3 separation;
    Mat3 matrix;
};

// Intermediate-state data for second-order perturbation sums:
// excitation energy E_b - E_0 > 0 (e^2/a) and |<b|d_z|g>|^2 (e^2 a^2).
struct SpectrumLine {
    double excitation_energy = 0.0;
    double dz_squared = 0.0;
};

struct SpectrumTable {
    std::vector<SpectrumLine> entries;
    // CSV `excitation_energy,dz_squared`, `#` comments allowed.
    static SpectrumTable from_csv(const std::string& path);
};

// Coulomb dipole tensor g_ij = R^-3 (delta_ij - 3 X_i X_j / R^2).
InteractionTensor coulomb_tensor(const Vec3& separation);

// Total (Coulomb + modified transverse) dipole tensor from the radial
// kernel phi(R) = (2/(pi R)) int_0^inf [1 - f̂^2(t/R)] sin(t)/t dt,
// applying (delta_ij lap - d_i d_j) through the radial identities with
// phi', phi'' obtained by differentiating under the integral sign.
// f̂ = 1 gives exactly zero.
InteractionTensor gamma_tensor_exact(const cutoff::CutoffFunction& cutoff,
                                     const Vec3& separation,
                                     double rel_tol = 1e-8);

// gamma = 16 <d^2> / (3 pi e^2 lambda_c): the published R^-4 coupling
// strength, which also sets the van der Waals ratio.
double vdw_coupling(double d2, double lambda_c);

// Published large-R form: gamma R^-4 (4 X_i X_j / R^2 - delta_ij).
InteractionTensor gamma_tensor_asymptotic(double d2, double lambda_c,
                                          const Vec3& separation);

// Leading large-R term actually produced by the exact kernel:
// 2 gamma R^-4 (delta_ij - 2 X_i X_j / R^2). The two forms disagree; the
// exact tensor converges onto this one (see the report's discrepancy
// flags).
InteractionTensor gamma_tensor_leading_order(double d2, double lambda_c,
                                             const Vec3& separation);

// U'(R) = (6/R^6) sum_{b1 b2} m1^2 m2^2 / (2E0 - E_b1 - E_b2)  (< 0).
double vdw_standard(const SpectrumTable& atom_a, const SpectrumTable& atom_b,
                    double R);

// U(R) = (11/R^8) gamma^2 * (same spectral sum); U/U' = 11 gamma^2/(6 R^2)
// identically for any spectrum.
double vdw_modified(const SpectrumTable& atom_a, const SpectrumTable& atom_b,
                    double d2, double lambda_c, double R);

// (11/6) gamma^2: the coefficient of (a/R)^2 in U/U'.
double vdw_ratio_coefficient(double d2, double lambda_c);

// R* with |U(R*)| = |U'(R*)|: R* = sqrt(11/6) gamma.
double crossover_radius(double d2, double lambda_c);

} // namespace edrep::interactions
