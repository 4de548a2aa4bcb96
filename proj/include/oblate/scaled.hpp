#pragma once

// Overflow-proof value representation: a complex characteristic whose
// larger component magnitude lies in [1, 10), plus a base-10 integer
// exponent.  Series anchors, radial function values and factorial-scale
// prefactors all live in this form so that degrees far beyond the
// breakpoint neither overflow nor underflow.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oblate/numeric.hpp"

namespace oblate {

template <class R>
struct scaled {
    R char_re{};
    R char_im{};
    long long exp10{0};

    scaled() = default;
    scaled(R cr, R ci, long long e) : char_re(cr), char_im(ci), exp10(e) {}

    cx<R> characteristic() const { return {char_re, char_im}; }
    bool is_zero() const { return to_double(char_re) == 0.0 && to_double(char_im) == 0.0; }
};

using scaled_cxd = scaled<double>;

namespace detail {

template <class R>
R char_mag(const scaled<R>& s) {
    R a = num::fabs(s.char_re), b = num::fabs(s.char_im);
    return (a < b) ? b : a;
}

} // namespace detail

// Bring the characteristic into [1, 10).  Handles arbitrarily large or
// small inputs by stepping in chunks that stay inside native range.
template <class R>
scaled<R> normalized(scaled<R> s) {
    if (!num::isfinite(s.char_re) || !num::isfinite(s.char_im))
        throw std::domain_error("scaled: non-finite value");
    R m = detail::char_mag(s);
    if (to_double(m) == 0.0) return {R(0), R(0), 0};
    double lg = to_double(num::log10(m));
    long long k = static_cast<long long>(std::floor(lg));
    while (k != 0) {
        long long step = k;
        if (step > 250) step = 250;
        if (step < -250) step = -250;
        R f = num::pow10i_as(R(), -step);
        s.char_re = s.char_re * f;
        s.char_im = s.char_im * f;
        s.exp10 += step;
        k -= step;
    }
    // fix up boundary rounding
    m = detail::char_mag(s);
    while (to_double(m) >= 10.0) {
        s.char_re = s.char_re / R(10);
        s.char_im = s.char_im / R(10);
        s.exp10 += 1;
        m = detail::char_mag(s);
    }
    while (to_double(m) < 1.0) {
        s.char_re = s.char_re * R(10);
        s.char_im = s.char_im * R(10);
        s.exp10 -= 1;
        m = detail::char_mag(s);
    }
    return s;
}

template <class R>
scaled<R> scaled_from(cx<R> v) {
    if (!isfinite(v)) throw std::domain_error("scaled_from: non-finite value");
    return normalized<R>({v.re, v.im, 0});
}

template <class R>
scaled<R> scaled_from(R v) { return scaled_from(cx<R>(v)); }

// native value when the exponent is representable; saturates otherwise
template <class R>
cx<R> to_cx(const scaled<R>& s) {
    if (s.is_zero()) return {R(0), R(0)};
    R f = num::pow10i_as(R(), s.exp10);
    return {s.char_re * f, s.char_im * f};
}

template <class R>
scaled<R> scaled_mul(const scaled<R>& a, const scaled<R>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    cx<R> p = a.characteristic() * b.characteristic();
    return normalized<R>({p.re, p.im, a.exp10 + b.exp10});
}

template <class R>
scaled<R> scaled_mul(const scaled<R>& a, cx<R> b) {
    if (a.is_zero() || (to_double(b.re) == 0.0 && to_double(b.im) == 0.0)) return {};
    cx<R> p = a.characteristic() * b;
    return normalized<R>({p.re, p.im, a.exp10});
}

template <class R>
scaled<R> scaled_div(const scaled<R>& a, const scaled<R>& b) {
    if (b.is_zero()) throw std::domain_error("scaled_div: division by zero");
    if (a.is_zero()) return {};
    cx<R> q = a.characteristic() / b.characteristic();
    return normalized<R>({q.re, q.im, a.exp10 - b.exp10});
}

template <class R>
scaled<R> scaled_add(const scaled<R>& a, const scaled<R>& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const scaled<R>* big = &a;
    const scaled<R>* sml = &b;
    if (b.exp10 > a.exp10) { big = &b; sml = &a; }
    long long de = big->exp10 - sml->exp10;
    if (de > 2 * real_traits<R>::ndec + 8) return *big;
    R f = num::pow10i_as(R(), -de);
    cx<R> s = big->characteristic() + sml->characteristic() * f;
    return normalized<R>({s.re, s.im, big->exp10});
}

template <class R>
scaled<R> scaled_neg(const scaled<R>& a) { return {-a.char_re, -a.char_im, a.exp10}; }

template <class R>
scaled<R> scaled_sub(const scaled<R>& a, const scaled<R>& b) { return scaled_add(a, scaled_neg(b)); }

// log10 of the value's magnitude
template <class R>
double scaled_log10_mag(const scaled<R>& s) {
    if (s.is_zero()) return -1.0e18;
    return static_cast<double>(s.exp10) + to_double(num::log10(abs(s.characteristic())));
}

template <class R>
scaled<double> to_scaled_d(const scaled<R>& s) {
    return normalized<double>({to_double(s.char_re), to_double(s.char_im), s.exp10});
}

// ---- subtraction-error accounting -------------------------------------

// Decimal digits lost to cancellation, per the positive/negative partial
// sum rule, reduced over components by max.
struct SubtractionError {
    double digits_lost{0.0};
};

inline SubtractionError se_max(SubtractionError a, SubtractionError b) {
    return {a.digits_lost > b.digits_lost ? a.digits_lost : b.digits_lost};
}

inline SubtractionError se_sum(SubtractionError a, SubtractionError b) {
    return {a.digits_lost + b.digits_lost};
}

namespace detail {

inline double loss_from(double pos, double neg, double total, int ndec) {
    if (pos == 0.0 && neg == 0.0) return 0.0;
    double big = pos > neg ? pos : neg;
    if (total == 0.0) return static_cast<double>(ndec);
    double d = std::log10(big / std::fabs(total));
    if (d < 0.0) d = 0.0;
    if (d > ndec) d = static_cast<double>(ndec);
    return d;
}

} // namespace detail

// Accumulates a series in native precision while tracking the positive and
// negative partial sums of each component.
template <class R>
struct cancel_sum {
    R pos_re{}, neg_re{}, pos_im{}, neg_im{};
    R sum_re{}, sum_im{};

    void add(cx<R> t) {
        if (to_double(t.re) >= 0.0) pos_re += t.re; else neg_re -= t.re;
        if (to_double(t.im) >= 0.0) pos_im += t.im; else neg_im -= t.im;
        sum_re += t.re;
        sum_im += t.im;
    }

    cx<R> sum() const { return {sum_re, sum_im}; }

    SubtractionError error(int ndec) const {
        double er = detail::loss_from(to_double(pos_re), to_double(neg_re), to_double(sum_re), ndec);
        double ei = detail::loss_from(to_double(pos_im), to_double(neg_im), to_double(sum_im), ndec);
        return {er > ei ? er : ei};
    }
};

template <class R>
std::pair<cx<R>, SubtractionError> sum_with_error(const std::vector<cx<R>>& terms, int ndec) {
    cancel_sum<R> acc;
    for (const auto& t : terms) {
        if (!isfinite(t)) throw std::domain_error("sum_with_error: non-finite term");
        acc.add(t);
    }
    return {acc.sum(), acc.error(ndec)};
}

// Scaled-form accumulator for sums whose terms span huge magnitude ranges
// (quadrature of Neumann kernels).  Keeps four non-negative partial sums.
template <class R>
struct scaled_cancel_sum {
    scaled<R> pos_re{}, neg_re{}, pos_im{}, neg_im{};
    scaled<R> total{};

    void add(const scaled<R>& t) {
        if (t.is_zero()) return;
        total = scaled_add(total, t);
        scaled<R> tre{num::fabs(t.char_re), R(0), t.exp10};
        scaled<R> tim{num::fabs(t.char_im), R(0), t.exp10};
        if (to_double(t.char_re) != 0.0) {
            if (to_double(t.char_re) >= 0.0) pos_re = scaled_add(pos_re, normalized(tre));
            else neg_re = scaled_add(neg_re, normalized(tre));
        }
        if (to_double(t.char_im) != 0.0) {
            if (to_double(t.char_im) >= 0.0) pos_im = scaled_add(pos_im, normalized(tim));
            else neg_im = scaled_add(neg_im, normalized(tim));
        }
    }

    scaled<R> sum() const { return total; }

    SubtractionError error(int ndec) const {
        auto comp = [&](const scaled<R>& p, const scaled<R>& n, const scaled<R>& s) {
            if (p.is_zero() && n.is_zero()) return 0.0;
            double big = scaled_log10_mag(p.is_zero() ? n
                          : (n.is_zero() ? p
                          : (scaled_log10_mag(p) > scaled_log10_mag(n) ? p : n)));
            if (s.is_zero()) return static_cast<double>(ndec);
            double d = big - scaled_log10_mag(s);
            if (d < 0.0) d = 0.0;
            if (d > ndec) d = static_cast<double>(ndec);
            return d;
        };
        double er = comp(pos_re, neg_re, scaled_sub(pos_re, neg_re));
        double ei = comp(pos_im, neg_im, scaled_sub(pos_im, neg_im));
        return {er > ei ? er : ei};
    }
};

} // namespace oblate
