#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "edrep/quadrature.hpp"

namespace edrep::quad {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxN = 6;
constexpr int kMaxM = 4;

// Exact rational coefficient. Magnitudes stay small at the supported
// derivative depth; overflow means the depth cap is wrong, so it throws.
struct Rat {
    long long num = 0;
    long long den = 1;
};

long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw DepthUnsupported("closed_form_Inm: rational coefficient overflow");
    return out;
}

Rat normalized(long long n, long long d) {
    if (d == 0) throw DepthUnsupported("closed_form_Inm: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    return {g ? n / g : 0, g ? d / g : 1};
}

Rat operator*(const Rat& a, const Rat& b) {
    return normalized(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

Rat operator+(const Rat& a, const Rat& b) {
    const long long n =
        checked_mul(a.num, b.den) + checked_mul(b.num, a.den);
    return normalized(n, checked_mul(a.den, b.den));
}

enum class LogKind : std::uint8_t { none, log_a, log_b };

// c * pi^p * A^(ah/2) * B^bq * (A + B^2)^(-sp) * {1 | ln A | ln B}
struct Term {
    Rat c;
    int pi_pow;
    int a_half;
    int b_pow;
    int s_pow;
    LogKind log;
};

using Terms = std::vector<Term>;

bool same_shape(const Term& x, const Term& y) {
    return x.pi_pow == y.pi_pow && x.a_half == y.a_half &&
           x.b_pow == y.b_pow && x.s_pow == y.s_pow && x.log == y.log;
}

void merge(Terms& ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) {
        return std::tie(x.pi_pow, x.a_half, x.b_pow, x.s_pow, x.log) <
               std::tie(y.pi_pow, y.a_half, y.b_pow, y.s_pow, y.log);
    });
    Terms out;
    for (const Term& t : ts) {
        if (!out.empty() && same_shape(out.back(), t))
            out.back().c = out.back().c + t.c;
        else
            out.push_back(t);
    }
    std::erase_if(out, [](const Term& t) { return t.c.num == 0; });
    ts = std::move(out);
}

Terms d_dA(const Terms& ts) {
    Terms out;
    for (const Term& t : ts) {
        if (t.a_half != 0) {
            Term u = t;
            u.c = u.c * Rat{t.a_half, 2};
            u.a_half -= 2;
            out.push_back(u);
        }
        {
            Term u = t;
            u.c = u.c * Rat{-t.s_pow, 1};
            u.s_pow += 1;
            out.push_back(u);
        }
        if (t.log == LogKind::log_a) {
            Term u = t;
            u.log = LogKind::none;
            u.a_half -= 2;
            out.push_back(u);
        }
    }
    merge(out);
    return out;
}

Terms d_dB(const Terms& ts) {
    Terms out;
    for (const Term& t : ts) {
        if (t.b_pow != 0) {
            Term u = t;
            u.c = u.c * Rat{t.b_pow, 1};
            u.b_pow -= 1;
            out.push_back(u);
        }
        {
            Term u = t;
            u.c = u.c * Rat{-2LL * t.s_pow, 1};
            u.s_pow += 1;
            u.b_pow += 1;
            out.push_back(u);
        }
        if (t.log == LogKind::log_b) {
            Term u = t;
            u.log = LogKind::none;
            u.b_pow -= 1;
            out.push_back(u);
        }
    }
    merge(out);
    return out;
}

// I_11 = (A + B^2)^-1 [ pi B / (2 sqrt A) + ln(A)/2 - ln B ]
Terms base_i11() {
    return {
        {{1, 2}, 1, -1, 1, 1, LogKind::none},
        {{1, 2}, 0, 0, 0, 1, LogKind::log_a},
        {{-1, 1}, 0, 0, 0, 1, LogKind::log_b},
    };
}

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f = checked_mul(f, i);
    return f;
}

// Derivative tables for every supported (n, m), built once.
const Terms& table(int n, int m) {
    static const auto all = [] {
        std::array<std::array<Terms, kMaxM>, kMaxN> t;
        Terms row = base_i11();
        for (int n_ = 1; n_ <= kMaxN; ++n_) {
            Terms cur = row;
            for (int m_ = 1; m_ <= kMaxM; ++m_) {
                Terms scaled = cur;
                const long long sign = ((n_ + m_) % 2 == 0) ? 1 : -1;
                const Rat fac = normalized(
                    sign, checked_mul(factorial(n_ - 1), factorial(m_ - 1)));
                for (Term& term : scaled) term.c = term.c * fac;
                t[n_ - 1][m_ - 1] = std::move(scaled);
                if (m_ < kMaxM) cur = d_dB(cur);
            }
            if (n_ < kMaxN) row = d_dA(row);
        }
        return t;
    }();
    return all[n - 1][m - 1];
}

double eval(const Terms& ts, double A, double B) {
    const double sqrt_a = std::sqrt(A);
    const double s = A + B * B;
    const double log_a = std::log(A);
    const double log_b = std::log(B);
    double sum = 0.0;
    for (const Term& t : ts) {
        double v = static_cast<double>(t.c.num) / static_cast<double>(t.c.den);
        if (t.pi_pow) v *= std::pow(kPi, t.pi_pow);
        if (t.a_half) v *= std::pow(sqrt_a, t.a_half);
        if (t.b_pow) v *= std::pow(B, t.b_pow);
        if (t.s_pow) v *= std::pow(s, -t.s_pow);
        if (t.log == LogKind::log_a) v *= log_a;
        if (t.log == LogKind::log_b) v *= log_b;
        sum += v;
    }
    return sum;
}

} // namespace

double closed_form_In(double A, int n) {
    if (!(A > 0.0)) throw DomainError("closed_form_In: A must be positive");
    if (n < 1) throw DomainError("closed_form_In: n must be >= 1");
    // c_1 = 1, c_{j+1} = c_j (2j-1)/(2j)
    double c = 1.0;
    for (int j = 1; j < n; ++j) c *= (2.0 * j - 1.0) / (2.0 * j);
    return kPi / (2.0 * std::sqrt(A)) * c / std::pow(A, n - 1);
}

double closed_form_Inm(double A, double B, int n, int m) {
    if (!(A > 0.0) || !(B > 0.0))
        throw DomainError("closed_form_Inm: A and B must be positive");
    if (n < 1 || m < 1)
        throw DomainError("closed_form_Inm: n and m must be >= 1");
    if (n > kMaxN || m > kMaxM)
        throw DepthUnsupported("closed_form_Inm: derivative depth supports n <= 6, m <= 4");
    return eval(table(n, m), A, B);
}

double closed_form_z_moment(double A, double B, int n, int m) {
    if (m < 1) throw DomainError("closed_form_z_moment: m must be >= 1");
    const double head = (m == 1) ? closed_form_In(A, n) : closed_form_Inm(A, B, n, m - 1);
    return head - B * closed_form_Inm(A, B, n, m);
}

} // namespace edrep::quad
