#include "edrep/atomic_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "edrep/quadrature.hpp"

namespace edrep::atomic {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNormTol = 1e-8;

// Five-point Gauss-Legendre on [a, b]; exact through degree 9, which covers
// r^4 times a cubic segment.
template <class F>
double gauss5(const F& f, double a, double b) {
    static const double x[5] = {-0.9061798459386639928, -0.5384693101056830910,
                                0.0, 0.5384693101056830910,
                                0.9061798459386639928};
    static const double w[5] = {0.2369268850561890875, 0.4786286704993664680,
                                0.5688888888888888889, 0.4786286704993664680,
                                0.2369268850561890875};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += w[i] * f(c + h * x[i]);
    return s * h;
}

// Fritsch-Carlson monotone cubic slopes.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> d(n, 0.0);
    if (n == 2) {
        d[0] = d[1] = (y[1] - y[0]) / (x[1] - x[0]);
        return d;
    }
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto edge = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) return 0.0;
        if (d0 * d1 < 0.0 && std::fabs(s) > 3.0 * std::fabs(d0)) return 3.0 * d0;
        return s;
    };
    d[0] = edge(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = edge(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return d;
}

double hermite(double x0, double x1, double y0, double y1, double d0,
               double d1, double r) {
    const double h = x1 - x0;
    const double t = (r - x0) / h;
    const double t2 = t * t, t3 = t2 * t;
    return y0 * (2 * t3 - 3 * t2 + 1) + h * d0 * (t3 - 2 * t2 + t) +
           y1 * (-2 * t3 + 3 * t2) + h * d1 * (t3 - t2);
}

// int_{rl}^inf r^p exp(-beta (r - rl)) dr for p = 0..4.
double tail_power_moment(double rl, double beta, int p) {
    // expand (u + rl)^p, u >= 0; int u^q e^{-beta u} = q!/beta^(q+1)
    double fact = 1.0;
    double sum = 0.0;
    double binom = 1.0;
    for (int q = 0; q <= p; ++q) {
        if (q > 0) {
            binom = binom * (p - q + 1) / q;
            fact *= q;
        }
        sum += binom * std::pow(rl, p - q) * fact / std::pow(beta, q + 1);
    }
    return sum;
}

// int_{rl}^inf r exp(-beta (r - rl)) sin(k r) dr, closed form.
double tail_r_sin(double rl, double beta, double k) {
    const double den = beta * beta + k * k;
    const double s0 = k / den;
    const double c0 = beta / den;
    const double s1 = 2.0 * beta * k / (den * den);
    const double c1 = (beta * beta - k * k) / (den * den);
    return std::cos(k * rl) * (s1 + rl * s0) + std::sin(k * rl) * (c1 + rl * c0);
}

// Exact integral of r * n(r) * sin(kr) over one Hermite segment, by
// repeated integration by parts of the quartic p(u) = (x0 + u) n(x0 + u):
//   int p sin(kr) dr = [-p c/k + p' s/k^2 + p'' c/k^3 - p''' s/k^4
//                       - p'''' c/k^5]_{x0}^{x1}.
// Used once k h is large enough that the terms cannot cancel.
double cubic_segment_r_sin(double x0, double h, double y0, double y1,
                           double d0, double d1, double k) {
    const double delta = (y1 - y0) / h;
    const double c0 = y0;
    const double c1 = d0;
    const double c2 = (3.0 * delta - 2.0 * d0 - d1) / h;
    const double c3 = (d0 + d1 - 2.0 * delta) / (h * h);
    // p(u) = (x0 + u)(c0 + c1 u + c2 u^2 + c3 u^3)
    const double a0 = x0 * c0;
    const double a1 = c0 + x0 * c1;
    const double a2 = c1 + x0 * c2;
    const double a3 = c2 + x0 * c3;
    const double a4 = c3;

    auto boundary = [&](double u, double r) {
        const double p = a0 + u * (a1 + u * (a2 + u * (a3 + u * a4)));
        const double p1 = a1 + u * (2 * a2 + u * (3 * a3 + u * 4 * a4));
        const double p2 = 2 * a2 + u * (6 * a3 + u * 12 * a4);
        const double p3 = 6 * a3 + 24 * a4 * u;
        const double p4 = 24 * a4;
        const double c = std::cos(k * r), s = std::sin(k * r);
        const double ik = 1.0 / k;
        return ik * (-p * c +
                     ik * (p1 * s + ik * (p2 * c + ik * (-p3 * s - ik * p4 * c))));
    };
    return boundary(h, x0 + h) - boundary(0.0, x0);
}

// (r - sin(kr)/k)/k^2, evaluated without cancellation for small kr.
double sin_defect(double r, double k) {
    const double x = k * r;
    if (std::fabs(x) < 0.5) {
        const double x2 = x * x;
        // r^3 (1/6 - x^2/120 + x^4/5040 - x^6/362880)
        return r * r * r *
               (1.0 / 6.0 -
                x2 * (1.0 / 120.0 - x2 * (1.0 / 5040.0 - x2 / 362880.0)));
    }
    return (r - std::sin(x) / k) / (k * k);
}

struct Moments {
    double norm;
    double r4;
};

Moments tabulated_moments(const DensityProfile::Tabulated& t, bool need_r4) {
    const std::size_t n = t.r.size();
    double norm = 0.0, r4 = 0.0;
    const double r0 = t.r.front();
    norm += t.flat_value * r0 * r0 * r0 / 3.0;
    r4 += t.flat_value * std::pow(r0, 5) / 5.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        auto seg = [&](double r) {
            return hermite(t.r[i], t.r[i + 1], t.n[i], t.n[i + 1], t.slope[i],
                           t.slope[i + 1], r);
        };
        norm += gauss5([&](double r) { return r * r * seg(r); }, t.r[i], t.r[i + 1]);
        if (need_r4)
            r4 += gauss5([&](double r) { return r * r * r * r * seg(r); },
                         t.r[i], t.r[i + 1]);
    }
    if (t.n.back() > 0.0 && !t.tail_divergent) {
        const double rl = t.r.back();
        norm += t.n.back() * tail_power_moment(rl, t.tail_beta, 2);
        if (need_r4) r4 += t.n.back() * tail_power_moment(rl, t.tail_beta, 4);
    }
    return {4.0 * kPi * norm, 4.0 * kPi * r4};
}

} // namespace

double DensityProfile::Tabulated::eval(double rr) const {
    if (rr < r.front()) return flat_value;
    if (rr > r.back()) {
        if (n.back() == 0.0) return 0.0;
        return n.back() * std::exp(-tail_beta * (rr - r.back()));
    }
    const auto it = std::upper_bound(r.begin(), r.end(), rr);
    const std::size_t i = std::min<std::size_t>(
        r.size() - 2, static_cast<std::size_t>(std::max<std::ptrdiff_t>(
                          0, it - r.begin() - 1)));
    return hermite(r[i], r[i + 1], n[i], n[i + 1], slope[i], slope[i + 1], rr);
}

DensityProfile DensityProfile::hydrogen_1s() {
    DensityProfile p;
    p.kind_ = ProfileKind::hydrogen_1s;
    p.normalization_check_ = 1.0;
    return p;
}

DensityProfile DensityProfile::gaussian(double width) {
    if (!(width > 0.0)) throw DomainError("DensityProfile::gaussian: width must be positive");
    DensityProfile p;
    p.kind_ = ProfileKind::gaussian;
    p.width_ = width;
    p.normalization_check_ = 1.0;
    return p;
}

DensityProfile DensityProfile::tabulated(
    std::vector<std::pair<double, double>> samples) {
    if (samples.size() < 2)
        throw DomainError("DensityProfile::tabulated: need at least 2 samples");
    DensityProfile p;
    p.kind_ = ProfileKind::tabulated;
    auto& t = p.tab_;
    t.r.reserve(samples.size());
    t.n.reserve(samples.size());
    for (const auto& [r, nv] : samples) {
        if (!std::isfinite(r) || !std::isfinite(nv) || r < 0.0 || nv < 0.0)
            throw DomainError("DensityProfile::tabulated: samples must be finite, r >= 0, density >= 0");
        if (!t.r.empty() && r <= t.r.back())
            throw DomainError("DensityProfile::tabulated: r must be strictly increasing");
        t.r.push_back(r);
        t.n.push_back(nv);
    }
    t.slope = pchip_slopes(t.r, t.n);
    t.flat_value = t.n.front();

    const std::size_t m = t.n.size();
    const double n_last = t.n[m - 1], n_prev = t.n[m - 2];
    if (n_last == 0.0) {
        t.tail_beta = 0.0;
    } else if (n_prev > n_last) {
        t.tail_beta = std::log(n_prev / n_last) / (t.r[m - 1] - t.r[m - 2]);
    } else {
        t.tail_divergent = true;
    }

    Moments mom = tabulated_moments(t, false);
    p.normalization_check_ = mom.norm;
    if (std::fabs(mom.norm - 1.0) > kNormTol) {
        std::ostringstream os;
        os << "DensityProfile::tabulated: 4 pi int r^2 n dr = " << mom.norm
           << ", expected 1 within " << kNormTol;
        throw NormalizationError(os.str());
    }
    // Renormalise exactly so downstream transforms see unit charge.
    for (auto& v : t.n) v /= mom.norm;
    for (auto& v : t.slope) v /= mom.norm;
    t.flat_value /= mom.norm;
    return p;
}

DensityProfile DensityProfile::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open profile file: " + path);
    std::vector<std::pair<double, double>> samples;
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
                continue; // header row
        }
        std::istringstream ls(line);
        std::string a, b;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b, ','))
            throw IoError("malformed profile row: " + line);
        char* end = nullptr;
        const double r = std::strtod(a.c_str(), &end);
        const double n = std::strtod(b.c_str(), &end);
        samples.emplace_back(r, n);
    }
    if (samples.empty()) throw IoError("profile file has no data rows: " + path);
    return tabulated(std::move(samples));
}

double DensityProfile::gaussian_width() const {
    if (kind_ != ProfileKind::gaussian)
        throw DomainError("gaussian_width: not a gaussian profile");
    return width_;
}

const DensityProfile::Tabulated& DensityProfile::tabulated_data() const {
    if (kind_ != ProfileKind::tabulated)
        throw DomainError("tabulated_data: not a tabulated profile");
    return tab_;
}

double DensityProfile::density(double r) const {
    switch (kind_) {
    case ProfileKind::hydrogen_1s:
        return std::exp(-2.0 * r) / kPi;
    case ProfileKind::gaussian: {
        const double b = 2.0 / (width_ * width_);
        return std::pow(b / kPi, 1.5) * std::exp(-b * r * r);
    }
    case ProfileKind::tabulated:
        return tab_.eval(r);
    }
    return 0.0;
}

double mean_square_dipole(const DensityProfile& profile) {
    switch (profile.kind()) {
    case ProfileKind::hydrogen_1s:
        return 3.0;
    case ProfileKind::gaussian: {
        const double w = profile.gaussian_width();
        return 0.75 * w * w;
    }
    case ProfileKind::tabulated: {
        const auto& t = profile.tabulated_data();
        if (t.tail_divergent)
            throw DivergentMoment("mean_square_dipole: tabulated tail does not decay");
        return tabulated_moments(t, true).r4;
    }
    }
    return 0.0;
}

namespace {

// Transform pieces for tabulated profiles. `mode` selects the integrand:
// r n(r) sin(kr) for the plain transform, r n(r) sin_defect for the
// curvature route.
double tabulated_transform(const DensityProfile::Tabulated& t, double k) {
    const double r0 = t.r.front();
    // flat piece: n0 int_0^r0 r sin(kr) dr
    double acc = t.flat_value * (std::sin(k * r0) - k * r0 * std::cos(k * r0)) /
                 (k * k);
    for (std::size_t i = 0; i + 1 < t.r.size(); ++i) {
        const double len = t.r[i + 1] - t.r[i];
        if (k * len >= 2.0) {
            // fast oscillation: integrate the cubic segment in closed form
            acc += cubic_segment_r_sin(t.r[i], len, t.n[i], t.n[i + 1],
                                       t.slope[i], t.slope[i + 1], k);
            continue;
        }
        auto f = [&](double r) {
            return r * t.eval(r) * std::sin(k * r);
        };
        // keep each Gauss panel under ~1.5 rad of the oscillation
        const int pieces = std::max(1, static_cast<int>(std::ceil(len * k / 1.5)));
        for (int p = 0; p < pieces; ++p) {
            const double a = t.r[i] + len * p / pieces;
            const double b = t.r[i] + len * (p + 1) / pieces;
            acc += gauss5(f, a, b);
        }
    }
    if (t.n.back() > 0.0 && !t.tail_divergent)
        acc += t.n.back() * tail_r_sin(t.r.back(), t.tail_beta, k);
    return 4.0 * kPi * acc / k;
}

double tabulated_one_minus_over_k2(const DensityProfile::Tabulated& t, double k) {
    const double r0 = t.r.front();
    // flat piece via the series kernel (k r0 is always small in practice)
    double acc = gauss5([&](double r) { return t.flat_value * r * sin_defect(r, k); },
                        0.0, r0);
    for (std::size_t i = 0; i + 1 < t.r.size(); ++i) {
        auto f = [&](double r) { return r * t.eval(r) * sin_defect(r, k); };
        const double len = t.r[i + 1] - t.r[i];
        const int pieces = std::max(1, static_cast<int>(std::ceil(len * k / 1.5)));
        for (int p = 0; p < pieces; ++p) {
            const double a = t.r[i] + len * p / pieces;
            const double b = t.r[i] + len * (p + 1) / pieces;
            acc += gauss5(f, a, b);
        }
    }
    if (t.n.back() > 0.0 && !t.tail_divergent) {
        const double rl = t.r.back();
        const double nl = t.n.back();
        // int r n (r/k^2 - sin(kr)/k^3): both pieces analytic for the tail
        acc += nl * (tail_power_moment(rl, t.tail_beta, 2) / (k * k) -
                     tail_r_sin(rl, t.tail_beta, k) / (k * k));
    }
    return 4.0 * kPi * acc;
}

} // namespace

FormFactor form_factor(const DensityProfile& profile) {
    FormFactor ff;
    ff.small_k_curvature = mean_square_dipole(profile) / 6.0;

    switch (profile.kind()) {
    case ProfileKind::hydrogen_1s: {
        ff.evaluator = [](double k) {
            const double x = 0.25 * k * k; // z_k^2
            const double d = 1.0 + x;
            return 1.0 / (d * d);
        };
        ff.one_minus_over_k2 = [](double k) {
            const double x = 0.25 * k * k;
            const double d = 1.0 + x;
            return (2.0 + x) / (4.0 * d * d);
        };
        ff.tail_power = -4.0;
        break;
    }
    case ProfileKind::gaussian: {
        const double w = profile.gaussian_width();
        const double c = w * w / 8.0;
        ff.evaluator = [c](double k) { return std::exp(-c * k * k); };
        ff.one_minus_over_k2 = [c](double k) {
            if (k == 0.0) return c;
            return -std::expm1(-c * k * k) / (k * k);
        };
        ff.tail_power = -std::numeric_limits<double>::infinity();
        break;
    }
    case ProfileKind::tabulated: {
        if (profile.tabulated_data().tail_divergent)
            throw DivergentMoment("form_factor: tabulated tail does not decay");
        // copy keeps the evaluators valid past the profile's lifetime
        DensityProfile::Tabulated t = profile.tabulated_data();
        ff.evaluator = [t](double k) {
            if (k == 0.0) return 1.0; // analytic limit, unit charge
            return tabulated_transform(t, k);
        };
        ff.one_minus_over_k2 = [t](double k) {
            if (k == 0.0) k = 1e-8;
            return tabulated_one_minus_over_k2(t, k);
        };
        ff.tail_power = -4.0;
        break;
    }
    }
    return ff;
}

double form_factor_by_quadrature(const DensityProfile& profile, double k,
                                 double rel_tol) {
    if (k == 0.0) return 1.0;
    auto f = quad::Integrand::smooth([&profile, k](double r) {
        return r * profile.density(r) * std::sin(k * r);
    });
    const auto res = quad::integrate_semi_infinite(f, rel_tol, 1e-300);
    return 4.0 * kPi * res.value / k;
}

} // namespace edrep::atomic
