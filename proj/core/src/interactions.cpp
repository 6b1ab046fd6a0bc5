#include "edrep/interactions.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "edrep/quadrature.hpp"

namespace edrep::interactions {

namespace {
constexpr double kPi = 3.14159265358979323846;

Mat3 radial_tensor(const Vec3& sep, double ang_delta, double ang_unit) {
    // c_delta * delta_ij + c_unit * x̂_i x̂_j
    const Vec3 u = sep.normalized();
    return Mat3::identity() * ang_delta + Mat3::outer(u, u) * ang_unit;
}

void require_separation(const Vec3& sep, const char* where) {
    if (!(sep.norm() > 0.0))
        throw ZeroSeparation(std::string(where) + ": separation must be non-zero");
}

void validate(const SpectrumTable& t, const char* where) {
    if (t.entries.empty())
        throw EmptySpectrum(std::string(where) + ": spectrum table is empty");
    for (const auto& e : t.entries) {
        if (!(e.excitation_energy > 0.0))
            throw NonPositiveGap(std::string(where) +
                                 ": excitation energies must be positive");
        if (e.dz_squared < 0.0)
            throw DomainError(std::string(where) +
                              ": squared matrix elements must be >= 0");
    }
}

// sum_{b1 b2} m1^2 m2^2 / (2E0 - E_b1 - E_b2) = -sum m1^2 m2^2/(eps1+eps2)
double second_order_sum(const SpectrumTable& a, const SpectrumTable& b) {
    double sum = 0.0;
    for (const auto& ea : a.entries)
        for (const auto& eb : b.entries)
            sum -= ea.dz_squared * eb.dz_squared /
                   (ea.excitation_energy + eb.excitation_energy);
    return sum;
}

} // namespace

SpectrumTable SpectrumTable::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open spectrum file: " + path);
    SpectrumTable t;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (!std::isdigit(static_cast<unsigned char>(line[first])) &&
                line[first] != '-' && line[first] != '+' && line[first] != '.')
                continue;
        }
        std::istringstream ls(line);
        std::string a, b;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b, ','))
            throw IoError("malformed spectrum row: " + line);
        char* end = nullptr;
        t.entries.push_back(
            {std::strtod(a.c_str(), &end), std::strtod(b.c_str(), &end)});
    }
    return t;
}

InteractionTensor coulomb_tensor(const Vec3& separation) {
    require_separation(separation, "coulomb_tensor");
    const double R = separation.norm();
    const double r3 = 1.0 / (R * R * R);
    return {separation, radial_tensor(separation, r3, -3.0 * r3)};
}

InteractionTensor gamma_tensor_exact(const cutoff::CutoffFunction& cutoff,
                                     const Vec3& separation, double rel_tol) {
    require_separation(separation, "gamma_tensor_exact");
    if (!(cutoff.tail_power <= -3.0))
        throw DomainError("gamma_tensor_exact: cutoff must decay at least as k^-3");
    const double R = separation.norm();
    auto f = cutoff.evaluator;

    // phi(R) = (2/pi) I0 / R with I0 = int w(k) sin(kR) dk, w = (1-f̂^2)/k.
    // Differentiating under the integral sign:
    //   phi'  = (2/pi) ( I1/R - I0/R^2 ),        I1 = int (1-f̂^2) cos(kR) dk
    //   phi'' = (2/pi) ( -I2/R - 2 I1/R^2 + 2 I0/R^3 ),
    //                                            I2 = int k (1-f̂^2) sin(kR) dk
    // I1 and I2 have non-decaying envelopes; the averaging acceleration
    // assigns them their Abel values, which is exactly what the
    // distributional derivative requires for R > 0.
    auto one_minus_f2 = [f](double k) {
        const double v = f(k);
        return 1.0 - v * v;
    };
    const auto i0 = quad::integrate_oscillatory(
        quad::Integrand::smooth([one_minus_f2](double k) {
            return k > 0.0 ? one_minus_f2(k) / k : 0.0;
        }),
        R, rel_tol);
    const auto i1 = quad::integrate_oscillatory_cos(
        quad::Integrand::smooth(one_minus_f2), R, rel_tol);
    const auto i2 = quad::integrate_oscillatory(
        quad::Integrand::smooth([one_minus_f2](double k) {
            return k * one_minus_f2(k);
        }),
        R, rel_tol);

    const double phi_p = (2.0 / kPi) * (i1.value / R - i0.value / (R * R));
    const double phi_pp = (2.0 / kPi) * (-i2.value / R -
                                         2.0 * i1.value / (R * R) +
                                         2.0 * i0.value / (R * R * R));

    // (delta_ij lap - d_i d_j) phi
    //   = delta_ij (phi'' + phi'/R) - x̂_i x̂_j (phi'' - phi'/R)
    return {separation, radial_tensor(separation, phi_pp + phi_p / R,
                                      -(phi_pp - phi_p / R))};
}

double vdw_coupling(double d2, double lambda_c) {
    if (!(d2 > 0.0) || !(lambda_c > 0.0))
        throw DomainError("vdw_coupling: d2 and lambda_c must be positive");
    return 16.0 * d2 / (3.0 * kPi * lambda_c);
}

InteractionTensor gamma_tensor_asymptotic(double d2, double lambda_c,
                                          const Vec3& separation) {
    require_separation(separation, "gamma_tensor_asymptotic");
    const double R = separation.norm();
    const double pref = vdw_coupling(d2, lambda_c) / (R * R * R * R);
    return {separation, radial_tensor(separation, -pref, 4.0 * pref)};
}

InteractionTensor gamma_tensor_leading_order(double d2, double lambda_c,
                                             const Vec3& separation) {
    require_separation(separation, "gamma_tensor_leading_order");
    const double R = separation.norm();
    const double pref = 2.0 * vdw_coupling(d2, lambda_c) / (R * R * R * R);
    return {separation, radial_tensor(separation, pref, -2.0 * pref)};
}

double vdw_standard(const SpectrumTable& atom_a, const SpectrumTable& atom_b,
                    double R) {
    if (!(R > 0.0)) throw DomainError("vdw_standard: R must be positive");
    validate(atom_a, "vdw_standard");
    validate(atom_b, "vdw_standard");
    return 6.0 / std::pow(R, 6) * second_order_sum(atom_a, atom_b);
}

double vdw_modified(const SpectrumTable& atom_a, const SpectrumTable& atom_b,
                    double d2, double lambda_c, double R) {
    if (!(R > 0.0)) throw DomainError("vdw_modified: R must be positive");
    validate(atom_a, "vdw_modified");
    validate(atom_b, "vdw_modified");
    const double g = vdw_coupling(d2, lambda_c);
    return 11.0 / std::pow(R, 8) * g * g * second_order_sum(atom_a, atom_b);
}

double vdw_ratio_coefficient(double d2, double lambda_c) {
    const double g = vdw_coupling(d2, lambda_c);
    return 11.0 / 6.0 * g * g;
}

double crossover_radius(double d2, double lambda_c) {
    return std::sqrt(11.0 / 6.0) * vdw_coupling(d2, lambda_c);
}

} // namespace edrep::interactions
