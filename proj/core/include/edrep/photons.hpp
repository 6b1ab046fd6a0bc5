#pragma once

#include <functional>

#include "edrep/cutoff.hpp"
#include "edrep/units.hpp"

namespace edrep::photons {

// Dressed-photon content of the transformed ground state.
// density(k) = <d^2>/(3 pi hbar c) * k f̂^2(k), photons per unit k.
struct PhotonSpectrum {
    std::function<double(double)> density;
    double total = 0.0;  // int_0^inf density dk
    double peak_k = 0.0; // argmax of density; 0 for the empty spectrum
};

struct MediumSpec {
    double number_density_cm3 = 0.0; // atoms per cm^3
    PhotonSpectrum per_atom_spectrum;
};

PhotonSpectrum photon_spectrum(const cutoff::CutoffFunction& cutoff, double d2,
                               const UnitSystem& units = UnitSystem{},
                               double rel_tol = 1e-10);

// Photons per cm^3 of a medium of independent atoms.
double medium_photon_density(const MediumSpec& medium);

// Change of variables k = omega/c; the integral over omega equals total.
std::function<double(double)> frequency_distribution(
    const PhotonSpectrum& spectrum, const UnitSystem& units = UnitSystem{});

} // namespace edrep::photons
