#pragma once

#include <functional>

#include "edrep/errors.hpp"

namespace edrep::quad {

enum class Hint { smooth, oscillatory, algebraic_tail };

// A real function on [0, inf) together with a smoothness hint.
// Every probe must return a finite value; a NaN/inf sample aborts the
// enclosing quadrature with NonFiniteSample naming the probe point.
struct Integrand {
    std::function<double(double)> evaluator;
    Hint hint = Hint::smooth;
    double wavelength = 0.0; // oscillatory only
    double tail_power = 0.0; // algebraic_tail only

    static Integrand smooth(std::function<double(double)> f) {
        return {std::move(f), Hint::smooth, 0.0, 0.0};
    }
    static Integrand algebraic_tail(std::function<double(double)> f, double power) {
        return {std::move(f), Hint::algebraic_tail, 0.0, power};
    }
    static Integrand oscillatory(std::function<double(double)> f, double wavelength) {
        return {std::move(f), Hint::oscillatory, wavelength, 0.0};
    }
};

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    long evaluations = 0;
};

// int_0^inf f(z) dz for smooth / algebraic-tail integrands.
// Maps [0, inf) onto [0, 1) by z = t/(1-t) and subdivides adaptively
// (Gauss7/Kronrod15) until the error estimate meets
// max(rel_tol*|value|, abs_tol). Throws NonConvergent past the budget.
QuadResult integrate_semi_infinite(const Integrand& f, double rel_tol = 1e-10,
                                   double abs_tol = 0.0);

// int_0^inf f(k) sin(k r) dk. Integrates between consecutive zeros of
// sin(k r) and accelerates the alternating partial sums by iterated
// averaging, so slowly decaying (and Abel-summable non-decaying)
// envelopes converge. Throws ZeroFrequency for r <= 0.
QuadResult integrate_oscillatory(const Integrand& f_envelope, double r,
                                 double rel_tol = 1e-8);

// Same contract with a cosine kernel: int_0^inf f(k) cos(k r) dk.
QuadResult integrate_oscillatory_cos(const Integrand& f_envelope, double r,
                                     double rel_tol = 1e-8);

// I_n(A) = int_0^inf (z^2 + A)^-n dz  =  pi/(2 sqrt(A)) * c_n / A^(n-1),
// with the rational c_n generated by differentiating I_1 with respect
// to A:  c_1 = 1,  c_{j+1} = c_j (2j-1)/(2j).
double closed_form_In(double A, int n);

// I_nm(A,B) = int_0^inf (z^2 + A)^-n (z + B)^-m dz, obtained by exact
// symbolic mixed partial derivatives of the base case
// I_11 = (A + B^2)^-1 [ pi B / (2 sqrt A) + ln(A)/2 - ln B ].
// Supported up to n <= 6, m <= 4; beyond that throws DepthUnsupported.
double closed_form_Inm(double A, double B, int n, int m);

// int_0^inf z (z^2 + A)^-n (z + B)^-m dz = I_{n,m-1} - B I_{nm},
// where I_{n,0} = I_n. Bridges the closed-form family to integrands
// carrying a z numerator.
double closed_form_z_moment(double A, double B, int n, int m);

} // namespace edrep::quad
