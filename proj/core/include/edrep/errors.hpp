#pragma once

#include <stdexcept>
#include <string>

namespace edrep {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An argument is outside the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

// A quadrature or minimisation did not reach the requested tolerance
// within its evaluation budget.
struct NonConvergent : Error {
    using Error::Error;
};

// An integrand returned NaN or +-inf at a probe point.
struct NonFiniteSample : Error {
    using Error::Error;
};

// Oscillatory transform called with frequency r <= 0.
struct ZeroFrequency : Error {
    using Error::Error;
};

// Requested (n, m) exceeds the depth of the hard-coded derivative tables.
struct DepthUnsupported : Error {
    using Error::Error;
};

// Density does not integrate to unit charge within tolerance.
struct NormalizationError : Error {
    using Error::Error;
};

// Tabulated density tail grows, so r^4 moments do not exist.
struct DivergentMoment : Error {
    using Error::Error;
};

// Dipole tensors are undefined at zero separation.
struct ZeroSeparation : Error {
    using Error::Error;
};

// Perturbation sum over an empty spectrum table.
struct EmptySpectrum : Error {
    using Error::Error;
};

// Spectrum table contains a non-positive excitation energy.
struct NonPositiveGap : Error {
    using Error::Error;
};

// CLI-level errors.
struct ConfigError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct ComputationError : Error {
    using Error::Error;
};

} // namespace edrep
