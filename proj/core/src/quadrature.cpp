#include "edrep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <vector>

namespace edrep::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Gauss7/Kronrod15 abscissae and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct GkResult {
    double value = 0.0;
    double error = 0.0;
    double resabs = 0.0;
};

template <class F>
GkResult gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::fabs(fc);

    double fv1[7], fv2[7];
    for (int i = 0; i < 7; ++i) {
        fv1[i] = f(c - h * kXgk[i]);
        fv2[i] = f(c + h * kXgk[i]);
        const double sum = fv1[i] + fv2[i];
        resk += kWgk[i] * sum;
        resabs += kWgk[i] * (std::fabs(fv1[i]) + std::fabs(fv2[i]));
        if (i % 2 == 1) resg += kWg[i / 2] * sum;
    }

    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::fabs(fv1[i] - reskh) + std::fabs(fv2[i] - reskh));

    GkResult r;
    r.value = resk * h;
    r.resabs = resabs * std::fabs(h);
    resasc *= std::fabs(h);
    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (r.resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
        err = std::max(err, 50.0 * kEps * r.resabs);
    r.error = err;
    return r;
}

struct Interval {
    double a, b, value, error, resabs;
    bool operator<(const Interval& o) const { return error < o.error; }
};

struct AdaptOutcome {
    double value = 0.0;
    double error = 0.0;
    double resabs = 0.0;
    bool converged = false;
};

// Adaptive bisection on a finite interval. Stops once the summed error
// estimate meets max(rel_tol*|value|, abs_tol) or the budget runs out.
template <class F>
AdaptOutcome adaptive_finite(const F& f, double a, double b, double rel_tol,
                             double abs_tol, long max_evals, long& evals) {
    AdaptOutcome out;
    GkResult first = gk15(f, a, b);
    evals += 15;

    std::priority_queue<Interval> heap;
    heap.push({a, b, first.value, first.error, first.resabs});
    double total_val = first.value;
    double total_err = first.error;
    out.resabs = first.resabs;

    auto tol = [&] { return std::max(rel_tol * std::fabs(total_val), abs_tol); };
    const double roundoff_floor = 100.0 * kEps;

    while (total_err > tol() && evals + 30 <= max_evals && !heap.empty()) {
        Interval worst = heap.top();
        // Cannot improve once the worst interval is at roundoff width.
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;
        if (total_err <= roundoff_floor * out.resabs) break;
        heap.pop();

        GkResult left = gk15(f, worst.a, mid);
        GkResult right = gk15(f, mid, worst.b);
        evals += 30;
        total_val += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        out.resabs += left.resabs + right.resabs - worst.resabs;
        heap.push({worst.a, mid, left.value, left.error, left.resabs});
        heap.push({mid, worst.b, right.value, right.error, right.resabs});
    }

    out.value = total_val;
    out.error = total_err;
    out.converged =
        total_err <= tol() || total_err <= roundoff_floor * out.resabs;
    return out;
}

std::function<double(double)> guarded(const Integrand& f, const char* where) {
    auto eval = f.evaluator;
    if (!eval) throw DomainError(std::string(where) + ": integrand has no evaluator");
    std::string name(where);
    return [eval, name](double x) {
        const double v = eval(x);
        if (!std::isfinite(v)) {
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "%s: non-finite sample at x = %.17g", name.c_str(), x);
            throw NonFiniteSample(buf);
        }
        return v;
    };
}

// Iterated-mean acceleration of a partial-sum sequence. Row m holds the
// m-fold averaged diagonal, so the deepest entry is a binomially weighted
// mean of the most recent partial sums; this sums alternating series with
// polynomially growing terms to their Abel value.
class AveragingTable {
  public:
    explicit AveragingTable(std::size_t depth_cap = 40) : cap_(depth_cap) {}

    double push(double partial_sum) {
        std::vector<double> old = row_;
        const std::size_t len = std::min(old.size() + 1, cap_ + 1);
        row_.assign(len, 0.0);
        row_[0] = partial_sum;
        for (std::size_t m = 1; m < len; ++m)
            row_[m] = 0.5 * (row_[m - 1] + old[m - 1]);
        return row_.back();
    }

  private:
    std::size_t cap_;
    std::vector<double> row_;
};

QuadResult oscillatory_transform(const Integrand& f_envelope, double r,
                                 double rel_tol, bool cosine,
                                 const char* where) {
    if (!(r > 0.0)) throw ZeroFrequency(std::string(where) + ": frequency r must be positive");
    if (!(rel_tol > 0.0)) throw DomainError(std::string(where) + ": rel_tol must be positive");

    auto env = guarded(f_envelope, where);
    auto integrand = [&](double k) {
        return env(k) * (cosine ? std::cos(k * r) : std::sin(k * r));
    };

    const double pi = 3.14159265358979323846;
    const double half_period = pi / r;
    auto boundary = [&](long j) -> double {
        if (j == 0) return 0.0;
        return cosine ? (static_cast<double>(j) - 0.5) * half_period
                      : static_cast<double>(j) * half_period;
    };

    const long max_segments = 200000;
    const long max_evals = 30000000;
    long evals = 0;

    AveragingTable table;
    double sum = 0.0;
    double est = 0.0, prev_est = 0.0;
    double seg_err_sum = 0.0;
    double max_partial = 0.0;
    double conv_diff = std::numeric_limits<double>::infinity();
    int stable = 0;
    bool converged = false;

    for (long j = 0; j < max_segments; ++j) {
        const double a = boundary(j);
        const double b = boundary(j + 1);
        const double seg_abs = max_partial * rel_tol * 1e-2;
        AdaptOutcome seg = adaptive_finite(integrand, a, b, rel_tol * 1e-2,
                                           seg_abs, 40000, evals);
        if (!seg.converged)
            throw NonConvergent(std::string(where) +
                                ": segment quadrature stalled");
        sum += seg.value;
        seg_err_sum += seg.error;
        max_partial = std::max(max_partial, std::fabs(seg.value));

        prev_est = est;
        est = table.push(sum);

        if (j >= 8) {
            const double floor = 64.0 * kEps * max_partial + 1e-300;
            const double tol = std::max(rel_tol * std::fabs(est), floor);
            conv_diff = std::fabs(est - prev_est);
            stable = (conv_diff <= tol) ? stable + 1 : 0;
            if (stable >= 4) {
                converged = true;
                break;
            }
        }
        if (evals >= max_evals) break;
    }

    if (!converged)
        throw NonConvergent(std::string(where) +
                            ": accelerated series did not stabilise");

    QuadResult out;
    out.value = est;
    out.abs_error_estimate = conv_diff + seg_err_sum;
    out.evaluations = evals;
    return out;
}

} // namespace

QuadResult integrate_semi_infinite(const Integrand& f, double rel_tol,
                                   double abs_tol) {
    if (!(rel_tol > 0.0)) throw DomainError("integrate_semi_infinite: rel_tol must be positive");
    if (abs_tol < 0.0) throw DomainError("integrate_semi_infinite: abs_tol must be non-negative");

    auto g = guarded(f, "integrate_semi_infinite");
    // z = t/(1-t) maps [0,1) onto [0,inf); algebraic tails z^-p become
    // (1-t)^(p-2) near t = 1, which bisection resolves.
    auto mapped = [&](double t) {
        const double one_minus = 1.0 - t;
        if (one_minus == 0.0) return 0.0; // t rounded onto the open endpoint
        const double den = one_minus * one_minus;
        const double fv = g(t / one_minus);
        if (fv == 0.0) return 0.0;
        return fv / den;
    };

    long evals = 0;
    AdaptOutcome out =
        adaptive_finite(mapped, 0.0, 1.0, rel_tol, abs_tol, 2000000, evals);
    if (!out.converged)
        throw NonConvergent("integrate_semi_infinite: tolerance not reached "
                            "within evaluation budget");
    return {out.value, out.error, evals};
}

QuadResult integrate_oscillatory(const Integrand& f_envelope, double r,
                                 double rel_tol) {
    return oscillatory_transform(f_envelope, r, rel_tol, false,
                                 "integrate_oscillatory");
}

QuadResult integrate_oscillatory_cos(const Integrand& f_envelope, double r,
                                     double rel_tol) {
    return oscillatory_transform(f_envelope, r, rel_tol, true,
                                 "integrate_oscillatory_cos");
}

} // namespace edrep::quad
