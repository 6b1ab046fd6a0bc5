#pragma once

#include "edrep/errors.hpp"

namespace edrep {

// Internal unit system: e = hbar = m = 1, lengths in Bohr radii a,
// energies in e^2/a. In these units c = 1/alpha and the electron
// Compton length lambda_c = hbar/(m c) equals alpha exactly.
struct UnitSystem {
    double alpha = 1.0 / 137.035999;

    constexpr UnitSystem() = default;
    explicit UnitSystem(double alpha_) : alpha(alpha_) {
        if (!(alpha > 0.0 && alpha < 1.0))
            throw DomainError("UnitSystem: alpha must lie in (0, 1)");
    }

    double compton_length() const { return alpha; }   // lambda_c in Bohr radii
    double light_speed() const { return 1.0 / alpha; } // c in a * (e^2/a) / hbar
    double hbar_c() const { return 1.0 / alpha; }      // hbar*c in e^2 * a
};

// Bohr radius in centimetres, used only at the CLI boundary.
inline constexpr double kBohrRadiusCm = 5.29177e-9;

} // namespace edrep
