#pragma once

// Generic real/complex numeric layer.  Every algorithm in the library is
// templated on the real type R, which is either double (working tier) or
// dd (extended tier).  cx<R> is the matching complex type.

#include <cmath>
#include <cstdint>
#include <limits>

#include "oblate/dd.hpp"

namespace oblate {

// ---- real-type shims -------------------------------------------------

template <class R> struct real_traits;

template <> struct real_traits<double> {
    static constexpr int ndec = 15;
    static constexpr double eps = 2.220446049250313e-16;
};

template <> struct real_traits<dd> {
    static constexpr int ndec = 31;
    static constexpr double eps = 4.93038065763132e-32;
};

inline double to_double(double x) { return x; }

namespace num {

inline double fabs(double x) { return std::fabs(x); }
inline double sqrt(double x) { return std::sqrt(x); }
inline double exp(double x) { return std::exp(x); }
inline double log(double x) { return std::log(x); }
inline double log10(double x) { return std::log10(x); }
inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }
inline double atan2(double y, double x) { return std::atan2(y, x); }
inline double floor(double x) { return std::floor(x); }
inline bool isfinite(double x) { return std::isfinite(x); }
inline double pow10i_as(double, long long k) {
    if (k > 308) return std::numeric_limits<double>::infinity();
    if (k < -320) return 0.0;
    return std::pow(10.0, static_cast<double>(k));
}

inline dd fabs(dd x) { return oblate::fabs(x); }
inline dd sqrt(dd x) { return oblate::sqrt(x); }
inline dd exp(dd x) { return oblate::exp(x); }
inline dd log(dd x) { return oblate::log(x); }
inline dd log10(dd x) { return oblate::log10(x); }
inline dd sin(dd x) { return oblate::sin(x); }
inline dd cos(dd x) { return oblate::cos(x); }
inline dd atan2(dd y, dd x) { return oblate::atan2(y, x); }
inline dd floor(dd x) { return oblate::floor(x); }
inline bool isfinite(dd x) { return oblate::isfinite(x); }
inline dd pow10i_as(dd, long long k) { return oblate::pow10i(k); }

} // namespace num

// ---- complex ---------------------------------------------------------

template <class R>
struct cx {
    R re{};
    R im{};

    cx() = default;
    cx(R r) : re(r), im(R(0)) {}
    cx(R r, R i) : re(r), im(i) {}

    template <class S>
    explicit cx(const cx<S>& o) : re(R(to_double(o.re))), im(R(to_double(o.im))) {}
};

using cxd = cx<double>;
using cxdd = cx<dd>;

template <class R> cx<R> operator+(cx<R> a, cx<R> b) { return {a.re + b.re, a.im + b.im}; }
template <class R> cx<R> operator-(cx<R> a, cx<R> b) { return {a.re - b.re, a.im - b.im}; }
template <class R> cx<R> operator-(cx<R> a) { return {-a.re, -a.im}; }
template <class R> cx<R> operator*(cx<R> a, cx<R> b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R> cx<R> operator/(cx<R> a, cx<R> b) {
    // Smith's algorithm
    if (num::fabs(b.re) >= num::fabs(b.im)) {
        R r = b.im / b.re;
        R den = b.re + b.im * r;
        return {(a.re + a.im * r) / den, (a.im - a.re * r) / den};
    }
    R r = b.re / b.im;
    R den = b.im + b.re * r;
    return {(a.re * r + a.im) / den, (a.im * r - a.re) / den};
}

template <class R> cx<R> operator+(cx<R> a, R b) { return {a.re + b, a.im}; }
template <class R> cx<R> operator+(R a, cx<R> b) { return {a + b.re, b.im}; }
template <class R> cx<R> operator-(cx<R> a, R b) { return {a.re - b, a.im}; }
template <class R> cx<R> operator-(R a, cx<R> b) { return {a - b.re, -b.im}; }
template <class R> cx<R> operator*(cx<R> a, R b) { return {a.re * b, a.im * b}; }
template <class R> cx<R> operator*(R a, cx<R> b) { return {a * b.re, a * b.im}; }
template <class R> cx<R> operator/(cx<R> a, R b) { return {a.re / b, a.im / b}; }
template <class R> cx<R> operator/(R a, cx<R> b) { return cx<R>(a) / b; }

template <class R> cx<R>& operator+=(cx<R>& a, cx<R> b) { a = a + b; return a; }
template <class R> cx<R>& operator-=(cx<R>& a, cx<R> b) { a = a - b; return a; }
template <class R> cx<R>& operator*=(cx<R>& a, cx<R> b) { a = a * b; return a; }
template <class R> cx<R>& operator/=(cx<R>& a, cx<R> b) { a = a / b; return a; }

template <class R> bool operator==(cx<R> a, cx<R> b) { return a.re == b.re && a.im == b.im; }
template <class R> bool operator!=(cx<R> a, cx<R> b) { return !(a == b); }

template <class R> cx<R> conj(cx<R> a) { return {a.re, -a.im}; }

template <class R> R abs(cx<R> a) {
    R x = num::fabs(a.re), y = num::fabs(a.im);
    if (to_double(x) == 0.0) return y;
    if (to_double(y) == 0.0) return x;
    if (x < y) { R t = x; x = y; y = t; }
    R r = y / x;
    return x * num::sqrt(R(1) + r * r);
}

template <class R> R norm(cx<R> a) { return a.re * a.re + a.im * a.im; }

template <class R> cx<R> sqrt(cx<R> a) {
    R m = abs(a);
    if (to_double(m) == 0.0) return {R(0), R(0)};
    R w = num::sqrt((m + num::fabs(a.re)) * R(0.5));
    if (to_double(a.re) >= 0.0) {
        return {w, a.im / (w * R(2))};
    }
    R iw = (to_double(a.im) >= 0.0) ? w : -w;
    return {a.im / (iw * R(2)), iw};
}

template <class R> cx<R> exp(cx<R> a) {
    R e = num::exp(a.re);
    return {e * num::cos(a.im), e * num::sin(a.im)};
}

template <class R> cx<R> log(cx<R> a) {
    return {num::log(abs(a)), num::atan2(a.im, a.re)};
}

template <class R> cx<R> sin(cx<R> a) {
    // sin(x+iy) = sin x cosh y + i cos x sinh y
    R ep = num::exp(a.im), em = R(1) / ep;
    R ch = (ep + em) * R(0.5), sh = (ep - em) * R(0.5);
    return {num::sin(a.re) * ch, num::cos(a.re) * sh};
}

template <class R> cx<R> cos(cx<R> a) {
    R ep = num::exp(a.im), em = R(1) / ep;
    R ch = (ep + em) * R(0.5), sh = (ep - em) * R(0.5);
    return {num::cos(a.re) * ch, -num::sin(a.re) * sh};
}

template <class R> bool isfinite(cx<R> a) { return num::isfinite(a.re) && num::isfinite(a.im); }

template <class R> cx<R> pow_int(cx<R> a, long long n) {
    bool inv = n < 0;
    unsigned long long k = inv ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    cx<R> r(R(1));
    cx<R> b = a;
    while (k) {
        if (k & 1ULL) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return inv ? cx<R>(R(1)) / r : r;
}

// i^k for integer k (exact)
template <class R> cx<R> ipow(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {R(1), R(0)};
        case 1: return {R(0), R(1)};
        case 2: return {R(-1), R(0)};
        default: return {R(0), R(-1)};
    }
}

template <class R> cx<double> to_cxd(cx<R> a) { return {to_double(a.re), to_double(a.im)}; }

// digits of agreement between two complex values, clamped to [0, ndec]
template <class R>
double digits_agree(cx<R> a, cx<R> b, int ndec) {
    R d = abs(a - b);
    R m = abs(b);
    if (to_double(m) == 0.0) m = abs(a);
    if (to_double(m) == 0.0) return ndec;
    if (to_double(d) == 0.0) return ndec;
    double g = -to_double(num::log10(d / m));
    if (g < 0.0) g = 0.0;
    if (g > ndec) g = ndec;
    return g;
}

} // namespace oblate
