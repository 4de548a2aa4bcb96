#pragma once

// Double-double arithmetic: an unevaluated sum of two doubles giving
// roughly 31 decimal digits.  Used as the extended precision tier.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace oblate {

struct dd {
    double hi{0.0};
    double lo{0.0};

    constexpr dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}
    constexpr dd(int v) : hi(static_cast<double>(v)), lo(0.0) {}

    explicit operator double() const { return hi; }
};

namespace detail {

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace detail

inline dd operator+(dd a, dd b) {
    dd s = detail::two_sum(a.hi, b.hi);
    dd t = detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator-=(dd& a, dd b) { a = a - b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }
inline dd& operator/=(dd& a, dd b) { a = a / b; return a; }

inline dd operator+(dd a, double b) { return a + dd(b); }
inline dd operator+(double a, dd b) { return dd(a) + b; }
inline dd operator-(dd a, double b) { return a - dd(b); }
inline dd operator-(double a, dd b) { return dd(a) - b; }
inline dd operator*(dd a, double b) { return a * dd(b); }
inline dd operator*(double a, dd b) { return dd(a) * b; }
inline dd operator/(dd a, double b) { return a / dd(b); }
inline dd operator/(double a, dd b) { return dd(a) / b; }

inline bool operator==(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(dd a, dd b) { return !(a == b); }
inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b) { return b < a; }
inline bool operator<=(dd a, dd b) { return !(b < a); }
inline bool operator>=(dd a, dd b) { return !(a < b); }

inline double to_double(dd a) { return a.hi; }

inline dd fabs(dd a) { return (a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0)) ? -a : a; }
inline dd abs(dd a) { return fabs(a); }

inline bool isfinite(dd a) { return std::isfinite(a.hi); }

inline dd ldexp(dd a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }

inline dd floor(dd a) {
    double f = std::floor(a.hi);
    if (f == a.hi) {
        dd r = detail::quick_two_sum(f, std::floor(a.lo));
        return r;
    }
    return {f, 0.0};
}

inline dd round(dd a) { return floor(a + dd(0.5)); }

inline dd sqrt(dd a) {
    if (a.hi == 0.0 && a.lo == 0.0) return dd(0.0);
    double y = std::sqrt(a.hi);
    dd yd(y);
    // one Newton step doubles the accuracy of the double seed
    return (yd + a / yd) * dd(0.5);
}

namespace ddc {
// split constants from the QD library
inline constexpr dd ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr dd ln10{2.302585092994046, -2.1707562233822494e-16};
inline constexpr dd pi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr dd two_pi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr dd half_pi{1.5707963267948966, 6.123233995736766e-17};
inline constexpr double eps = 4.93038065763132e-32; // 2^-104
} // namespace ddc

inline dd exp(dd a) {
    if (a.hi > 709.0) return dd(std::numeric_limits<double>::infinity());
    if (a.hi < -709.0) return dd(0.0);
    double m = std::floor(a.hi / ddc::ln2.hi + 0.5);
    dd r = (a - ddc::ln2 * dd(m)) * dd(1.0 / 512.0);
    // Taylor series of exp(r) - 1
    dd term = r * r * dd(0.5);
    dd s = r + term;
    for (int i = 3; i < 18; ++i) {
        term = term * r / dd(static_cast<double>(i));
        s = s + term;
        if (std::fabs(term.hi) < ddc::eps) break;
    }
    // undo the /512 scaling: (1+s)^512 - 1 via repeated squaring of (1+s)
    for (int i = 0; i < 9; ++i) s = s * dd(2.0) + s * s;
    s = s + dd(1.0);
    return ldexp(s, static_cast<int>(m));
}

inline dd log(dd a) {
    if (a.hi <= 0.0) return dd(std::numeric_limits<double>::quiet_NaN());
    dd x(std::log(a.hi));
    x = x + a * exp(-x) - dd(1.0);
    x = x + a * exp(-x) - dd(1.0);
    return x;
}

inline dd log10(dd a) { return log(a) / ddc::ln10; }

namespace detail {

// sin/cos Taylor series on |t| <= pi/4
inline dd sin_taylor(dd t) {
    dd t2 = t * t;
    dd term = t;
    dd s = t;
    for (int i = 3; i < 36; i += 2) {
        term = -term * t2 / dd(static_cast<double>(i * (i - 1)));
        s = s + term;
        if (std::fabs(term.hi) < ddc::eps) break;
    }
    return s;
}

inline dd cos_taylor(dd t) {
    dd t2 = t * t;
    dd term(1.0);
    dd s(1.0);
    for (int i = 2; i < 36; i += 2) {
        term = -term * t2 / dd(static_cast<double>(i * (i - 1)));
        s = s + term;
        if (std::fabs(term.hi) < ddc::eps) break;
    }
    return s;
}

} // namespace detail

inline void sincos(dd a, dd& sin_out, dd& cos_out) {
    // reduce modulo 2*pi, then modulo pi/2
    dd z = round(a / ddc::two_pi);
    dd r = a - ddc::two_pi * z;
    dd qd = round(r / ddc::half_pi);
    dd t = r - ddc::half_pi * qd;
    int q = static_cast<int>(qd.hi);
    dd s = detail::sin_taylor(t);
    dd c = detail::cos_taylor(t);
    switch (((q % 4) + 4) % 4) {
        case 0: sin_out = s; cos_out = c; break;
        case 1: sin_out = c; cos_out = -s; break;
        case 2: sin_out = -s; cos_out = -c; break;
        default: sin_out = -c; cos_out = s; break;
    }
}

inline dd sin(dd a) { dd s, c; sincos(a, s, c); return s; }
inline dd cos(dd a) { dd s, c; sincos(a, s, c); return c; }

inline dd atan2(dd y, dd x) {
    if (x.hi == 0.0 && x.lo == 0.0 && y.hi == 0.0 && y.lo == 0.0) return dd(0.0);
    dd z(std::atan2(y.hi, x.hi));
    // Newton refinement on x*sin(z) - y*cos(z) = 0 with |(x,y)| absorbed
    for (int i = 0; i < 2; ++i) {
        dd s, c;
        sincos(z, s, c);
        dd num = y * c - x * s;
        dd den = x * c + y * s;
        if (den.hi == 0.0) break;
        z = z + num / den;
    }
    return z;
}

inline dd pow10i(long long k) {
    // exact for |k| <= 31 (fits in 106 bits), composed otherwise
    static const std::array<dd, 32> table = [] {
        std::array<dd, 32> t{};
        t[0] = dd(1.0);
        for (int i = 1; i < 32; ++i) t[i] = t[i - 1] * dd(10.0);
        return t;
    }();
    bool neg = k < 0;
    long long n = neg ? -k : k;
    dd r(1.0);
    while (n >= 31) { r = r * table[31]; n -= 31; }
    r = r * table[static_cast<size_t>(n)];
    return neg ? dd(1.0) / r : r;
}

} // namespace oblate
