#pragma once

// Associated Legendre function tables, stored as scaled values so that
// high orders and degrees neither overflow nor underflow:
//   - first kind at real argument in [-1, 1], with eta-derivatives
//   - closed forms at eta = 0
//   - first and second kind at imaginary argument i*xi (Rodrigues-type
//     convention F^m = (z^2-1)^{m/2} d^m F / dz^m, principal branches)
//
// Degree recurrence, all kinds:  (v-m+1) F_{v+1} = (2v+1) z F_v - (v+m) F_{v-1}

#include <stdexcept>
#include <vector>

#include "oblate/scaled.hpp"

namespace oblate {

// ---- real argument -----------------------------------------------------

// P^m_{m+n}(eta) and d/deta P^m_{m+n}(eta) for n = 0..n_max
template <class R>
struct legendre_table {
    int m{0};
    R eta{};
    std::vector<scaled<R>> val;
    std::vector<scaled<R>> der;
    bool der_singular{false}; // |eta| = 1 with m = 1: derivative diverges
};

namespace detail {

template <class R>
scaled<R> double_factorial_scaled(int n) {
    // n!! for odd or even n >= -1
    scaled<R> r = scaled_from(cx<R>(R(1)));
    for (int k = n; k >= 2; k -= 2) r = scaled_mul(r, cx<R>(R(k)));
    return r;
}

} // namespace detail

template <class R>
legendre_table<R> legendre_p(int m, int n_max, R eta) {
    if (m < 0 || n_max < 0) throw std::invalid_argument("legendre_p: bad order/degree");
    double e = to_double(eta);
    if (e < -1.0 || e > 1.0) throw std::domain_error("legendre_p: |eta| > 1");

    legendre_table<R> t;
    t.m = m;
    t.eta = eta;
    t.val.resize(static_cast<size_t>(n_max) + 2);
    t.der.resize(static_cast<size_t>(n_max) + 1);

    const bool at_edge = (e == 1.0 || e == -1.0);
    R one_m_e2 = (R(1) - eta) * (R(1) + eta);

    if (at_edge) {
        if (m == 0) {
            // P_v(+-1) = (+-1)^v, dP_v/deta(+-1) = (+-1)^{v-1} v(v+1)/2
            for (int n = 0; n <= n_max + 1; ++n) {
                double sgn = (e > 0.0 || n % 2 == 0) ? 1.0 : -1.0;
                t.val[n] = scaled_from(cx<R>(R(sgn)));
            }
            for (int n = 0; n <= n_max; ++n) {
                double v = n;
                double sgn = (e > 0.0 || (n + 1) % 2 == 0) ? 1.0 : -1.0;
                t.der[n] = scaled_from(cx<R>(R(sgn * v * (v + 1.0) * 0.5)));
            }
            return t;
        }
        // m > 0: all values vanish identically at the edge
        for (auto& v : t.val) v = scaled<R>{};
        if (m == 1) {
            // derivative diverges; flagged, entries left at zero
            t.der_singular = true;
            for (auto& d : t.der) d = scaled<R>{};
        } else if (m == 2) {
            // d/deta P^2_v(+-1) = -2 eta P_v''(+-1),
            // P_v''(1) = (v-1)v(v+1)(v+2)/8 with parity sign at -1
            for (int n = 0; n <= n_max; ++n) {
                double v = m + n;
                double p2 = (v - 1.0) * v * (v + 1.0) * (v + 2.0) / 8.0;
                double sgn = (e > 0.0 || static_cast<int>(v) % 2 == 0) ? 1.0 : -1.0;
                t.der[n] = scaled_from(cx<R>(R(-2.0 * e * sgn * p2)));
            }
        } else {
            for (auto& d : t.der) d = scaled<R>{};
        }
        return t;
    }

    // anchor P^m_m = (2m-1)!! (1-eta^2)^{m/2}
    scaled<R> anchor = detail::double_factorial_scaled<R>(2 * m - 1);
    R s = num::sqrt(one_m_e2);
    for (int k = 0; k < m; ++k) anchor = scaled_mul(anchor, cx<R>(s));
    t.val[0] = anchor;
    t.val[1] = scaled_mul(anchor, cx<R>(R(2 * m + 1) * eta));
    for (int n = 1; n <= n_max; ++n) {
        long long v = m + n;
        scaled<R> a = scaled_mul(t.val[n], cx<R>(R(static_cast<double>(2 * v + 1)) * eta));
        scaled<R> b = scaled_mul(t.val[n - 1], cx<R>(R(static_cast<double>(-(v + m)))));
        t.val[n + 1] = scaled_mul(scaled_add(a, b), cx<R>(R(1) / R(static_cast<double>(v - m + 1))));
    }
    // (1-eta^2) dP_v = (v+1) eta P_v - (v-m+1) P_{v+1}
    for (int n = 0; n <= n_max; ++n) {
        long long v = m + n;
        scaled<R> a = scaled_mul(t.val[n], cx<R>(R(static_cast<double>(v + 1)) * eta));
        scaled<R> b = scaled_mul(t.val[n + 1], cx<R>(R(static_cast<double>(-(v - m + 1)))));
        t.der[n] = scaled_mul(scaled_add(a, b), cx<R>(R(1) / one_m_e2));
    }
    return t;
}

// ---- eta = 0 closed forms ----------------------------------------------

// P^m_{m+n}(0) (zero for odd n) and the derivative (zero for even n):
//   P^m_m(0) = (2m-1)!!, successive even ratio -(2m+2k+1)/(2k+2)
//   dP^m_{m+1}(0) = (2m+1)!!, successive odd ratio -(2m+n+2)/(n+1)
template <class R>
struct legendre_zero_table {
    int m{0};
    std::vector<scaled<R>> val;
    std::vector<scaled<R>> der;
};

template <class R>
legendre_zero_table<R> legendre_p_zero_table(int m, int n_max) {
    if (m < 0 || n_max < 0) throw std::invalid_argument("legendre_p_zero: bad args");
    legendre_zero_table<R> t;
    t.m = m;
    t.val.assign(static_cast<size_t>(n_max) + 1, scaled<R>{});
    t.der.assign(static_cast<size_t>(n_max) + 1, scaled<R>{});
    scaled<R> p = detail::double_factorial_scaled<R>(2 * m - 1);
    for (int n = 0; n <= n_max; n += 2) {
        t.val[n] = p;
        p = scaled_mul(p, cx<R>(R(-(2.0 * m + n + 1.0) / (n + 2.0))));
    }
    if (n_max >= 1) {
        scaled<R> d = detail::double_factorial_scaled<R>(2 * m + 1);
        for (int n = 1; n <= n_max; n += 2) {
            t.der[n] = d;
            d = scaled_mul(d, cx<R>(R(-(2.0 * m + n + 2.0) / (n + 1.0))));
        }
    }
    return t;
}

// single-value form
template <class R>
std::pair<scaled<R>, scaled<R>> legendre_p_zero(int m, int n) {
    auto t = legendre_p_zero_table<R>(m, n);
    return {t.val[static_cast<size_t>(n)], t.der[static_cast<size_t>(n)]};
}

// ---- imaginary argument ------------------------------------------------

// Q^m_v(i xi) for v = -m .. nu_max and P^m_v(i xi) for v = m .. nu_max,
// with d/dxi tables.  At xi = 0 the boundary values from above the cut.
template <class R>
struct legendre_imag_tables {
    int m{0};
    R xi{};
    int nu_max{0};
    // q[k] is Q^m_{k-m}, k = 0 .. nu_max + m (+1 spare for derivatives)
    std::vector<scaled<R>> q, dq;
    // p[k] is P^m_{m+k}, k = 0 .. nu_max - m
    std::vector<scaled<R>> p, dp;
    double q_forward_loss{0.0}; // digits lost if the forward chain was used

    const scaled<R>& Q(int nu) const { return q[static_cast<size_t>(nu + m)]; }
    const scaled<R>& dQ(int nu) const { return dq[static_cast<size_t>(nu + m)]; }
    const scaled<R>& P(int nu) const { return p[static_cast<size_t>(nu - m)]; }
    const scaled<R>& dP(int nu) const { return dp[static_cast<size_t>(nu - m)]; }
};

namespace detail {

// backward continued-fraction seed and sweep for the Q degree ratios
// r_v = Q_{v+1}/Q_v at order mu; returns r for v = 0..v_top-1
template <class R>
std::vector<cx<R>> q_ratio_backward(int mu, int v_top, cx<R> z, cx<R> w, int ndec) {
    double as = std::asinh(to_double(num::fabs(z.im)));
    int tail = static_cast<int>(1.2 * (ndec + 3) / (as > 1e-12 ? as : 1e-12));
    if (tail > 2000000) tail = 2000000;
    int start = v_top + tail + 10;
    std::vector<cx<R>> r(static_cast<size_t>(v_top));
    cx<R> rv = z - w; // minimal-solution limit
    for (int v = start; v >= 1; --v) {
        // r_{v-1} = (v+mu) / ((2v+1) z - (v-mu+1) r_v)
        cx<R> den = R(static_cast<double>(2 * v + 1)) * z - R(static_cast<double>(v - mu + 1)) * rv;
        rv = cx<R>(R(static_cast<double>(v + mu))) / den;
        if (v - 1 < v_top) r[static_cast<size_t>(v - 1)] = rv;
    }
    return r;
}

} // namespace detail

template <class R>
legendre_imag_tables<R> legendre_imag(int m, int nu_max, R xi) {
    if (to_double(xi) <= 0.0) throw std::domain_error("legendre_imag: xi must be > 0");
    if (m < 0 || nu_max < m + 1) throw std::invalid_argument("legendre_imag: bad range");
    const int ndec = real_traits<R>::ndec;

    legendre_imag_tables<R> t;
    t.m = m;
    t.xi = xi;
    t.nu_max = nu_max;

    cx<R> z{R(0), xi};
    cx<R> w = sqrt(z * z - R(1)); // = i sqrt(1+xi^2)

    // ---- order-0 anchors Q_0, Q_1 and the low-degree chain up to m+3
    cx<R> q0 = log((z + R(1)) / (z - R(1))) * R(0.5);
    cx<R> q1 = z * q0 - R(1);
    int chain_top = m + 3;
    std::vector<scaled<R>> q0v(static_cast<size_t>(chain_top) + 1);
    q0v[0] = scaled_from(q0);
    double as = std::asinh(to_double(xi));
    if (0.87 * static_cast<double>(chain_top) * as < 0.05) {
        // forward recursion contaminates by < 0.05 digits here
        q0v[1] = scaled_from(q1);
        for (int v = 1; v + 1 <= chain_top; ++v) {
            scaled<R> a = scaled_mul(q0v[static_cast<size_t>(v)], R(static_cast<double>(2 * v + 1)) * z);
            scaled<R> b = scaled_mul(q0v[static_cast<size_t>(v) - 1], cx<R>(R(static_cast<double>(-v))));
            q0v[static_cast<size_t>(v) + 1] = scaled_mul(scaled_add(a, b), cx<R>(R(1) / R(static_cast<double>(v + 1))));
        }
    } else {
        // Q decays with degree: build ratios by the backward sweep
        auto r = detail::q_ratio_backward<R>(0, chain_top, z, w, ndec);
        for (int v = 0; v < chain_top; ++v)
            q0v[static_cast<size_t>(v) + 1] = scaled_mul(q0v[static_cast<size_t>(v)], r[static_cast<size_t>(v)]);
    }

    // ---- raise order at degrees m and m+1:
    //   F^1_v = (v+1)(F_{v+1} - z F_v)/w
    //   F^{u+2}_v = (v-u)(v+u+1) F^u_v - 2(u+1)(z/w) F^{u+1}_v
    auto raise_to_m = [&](int v) -> scaled<R> {
        if (m == 0) return q0v[static_cast<size_t>(v)];
        scaled<R> f0 = q0v[static_cast<size_t>(v)];
        scaled<R> f1 = scaled_mul(
            scaled_sub(q0v[static_cast<size_t>(v) + 1], scaled_mul(f0, z)),
            cx<R>(R(static_cast<double>(v + 1))) / w);
        if (m == 1) return f1;
        for (int u = 0; u + 2 <= m; ++u) {
            scaled<R> f2 = scaled_sub(
                scaled_mul(f0, cx<R>(R(static_cast<double>(v - u)) * R(static_cast<double>(v + u + 1)))),
                scaled_mul(f1, R(static_cast<double>(2 * (u + 1))) * (z / w)));
            f0 = f1;
            f1 = f2;
        }
        return f1;
    };
    scaled<R> qmm = raise_to_m(m);
    scaled<R> qmm1 = raise_to_m(m + 1);

    // ---- Q^m degree table: downward to -m (stable), upward to nu_max+1
    int q_len = nu_max + m + 2;
    t.q.assign(static_cast<size_t>(q_len), scaled<R>{});
    t.q[static_cast<size_t>(m + m)] = qmm;
    t.q[static_cast<size_t>(m + m + 1)] = qmm1;
    for (int v = m; v - 1 >= -m; --v) {
        // F_{v-1} = [(2v+1) z F_v - (v-m+1) F_{v+1}] / (v+m)
        scaled<R> a = scaled_mul(t.Q(v), R(static_cast<double>(2 * v + 1)) * z);
        scaled<R> b = scaled_mul(t.Q(v + 1), cx<R>(R(static_cast<double>(-(v - m + 1)))));
        t.q[static_cast<size_t>(v - 1 + m)] = scaled_mul(scaled_add(a, b), cx<R>(R(1) / R(static_cast<double>(v + m))));
    }
    // upward: choose forward recursion when its contamination stays tiny,
    // otherwise the backward ratio sweep at order m
    double fwd_loss = 0.87 * static_cast<double>(nu_max) * as;
    if (fwd_loss < 0.05 || as < 1e-9) {
        t.q_forward_loss = fwd_loss;
        for (int v = m + 1; v + 1 < nu_max + 2; ++v) {
            scaled<R> a = scaled_mul(t.Q(v), R(static_cast<double>(2 * v + 1)) * z);
            scaled<R> b = scaled_mul(t.Q(v - 1), cx<R>(R(static_cast<double>(-(v + m)))));
            t.q[static_cast<size_t>(v + 1 + m)] = scaled_mul(scaled_add(a, b), cx<R>(R(1) / R(static_cast<double>(v - m + 1))));
        }
    } else {
        auto r = detail::q_ratio_backward<R>(m, nu_max + 1, z, w, ndec);
        for (int v = m; v + 1 < nu_max + 2; ++v)
            t.q[static_cast<size_t>(v + 1 + m)] = scaled_mul(t.q[static_cast<size_t>(v + m)], r[static_cast<size_t>(v)]);
    }

    // ---- P^m degree table upward from the Rodrigues anchor
    int p_len = nu_max - m + 2;
    t.p.assign(static_cast<size_t>(p_len), scaled<R>{});
    scaled<R> pmm = detail::double_factorial_scaled<R>(2 * m - 1);
    for (int k = 0; k < m; ++k) pmm = scaled_mul(pmm, w);
    t.p[0] = pmm;
    if (p_len > 1) t.p[1] = scaled_mul(pmm, R(static_cast<double>(2 * m + 1)) * z);
    for (int v = m + 1; v + 1 <= nu_max + 1; ++v) {
        scaled<R> a = scaled_mul(t.P(v), R(static_cast<double>(2 * v + 1)) * z);
        scaled<R> b = scaled_mul(t.P(v - 1), cx<R>(R(static_cast<double>(-(v + m)))));
        t.p[static_cast<size_t>(v + 1 - m)] = scaled_mul(scaled_add(a, b), cx<R>(R(1) / R(static_cast<double>(v - m + 1))));
    }

    // ---- derivatives: dF/dxi = i dF/dz,
    //   (z^2-1) dF/dz = (v-m+1) F_{v+1} - (v+1) z F_v
    cx<R> i_over_z2m1 = cx<R>{R(0), R(1)} / (z * z - R(1));
    t.dq.assign(static_cast<size_t>(q_len) - 1, scaled<R>{});
    for (int v = -m; v <= nu_max; ++v) {
        scaled<R> a = scaled_mul(t.Q(v + 1), cx<R>(R(static_cast<double>(v - m + 1))));
        scaled<R> b = scaled_mul(t.Q(v), R(static_cast<double>(-(v + 1))) * z);
        t.dq[static_cast<size_t>(v + m)] = scaled_mul(scaled_add(a, b), i_over_z2m1);
    }
    t.dp.assign(static_cast<size_t>(p_len) - 1, scaled<R>{});
    for (int v = m; v <= nu_max; ++v) {
        scaled<R> a = scaled_mul(t.P(v + 1), cx<R>(R(static_cast<double>(v - m + 1))));
        scaled<R> b = scaled_mul(t.P(v), R(static_cast<double>(-(v + 1))) * z);
        t.dp[static_cast<size_t>(v - m)] = scaled_mul(scaled_add(a, b), i_over_z2m1);
    }
    return t;
}

// Boundary values at xi = 0 (z -> 0 from the upper imaginary axis).
// Two-term ladders: (v-m+1) F_{v+1}(0) = -(v+m) F_{v-1}(0), and the
// xi-derivative d F_v/dxi(0) = -i (v-m+1) F_{v+1}(0).
template <class R>
legendre_imag_tables<R> legendre_imag_zero(int m, int nu_max) {
    if (m < 0 || nu_max < m + 1) throw std::invalid_argument("legendre_imag_zero: bad range");
    legendre_imag_tables<R> t;
    t.m = m;
    t.xi = R(0);
    t.nu_max = nu_max;

    int q_len = nu_max + m + 2;
    std::vector<scaled<R>> q0v(static_cast<size_t>(m) + 4);
    q0v[0] = scaled_from(cx<R>{R(0), R(-1)} * (R(0.5) * num::atan2(R(0), R(-1)))); // -i pi/2
    q0v[1] = scaled_from(cx<R>(R(-1)));
    for (int v = 1; v + 1 <= m + 3; ++v) {
        q0v[static_cast<size_t>(v) + 1] =
            scaled_mul(q0v[static_cast<size_t>(v) - 1], cx<R>(R(static_cast<double>(-v)) / R(static_cast<double>(v + 1))));
    }
    cx<R> iunit{R(0), R(1)};
    auto raise_to_m = [&](int v) -> scaled<R> {
        if (m == 0) return q0v[static_cast<size_t>(v)];
        scaled<R> f0 = q0v[static_cast<size_t>(v)];
        // F^1_v(0) = (v+1) F_{v+1}(0) / w(0),  w(0) = i
        scaled<R> f1 = scaled_mul(q0v[static_cast<size_t>(v) + 1], cx<R>(R(static_cast<double>(v + 1))) / iunit);
        if (m == 1) return f1;
        for (int u = 0; u + 2 <= m; ++u) {
            scaled<R> f2 = scaled_mul(f0, cx<R>(R(static_cast<double>(v - u)) * R(static_cast<double>(v + u + 1))));
            f0 = f1;
            f1 = f2;
        }
        return f1;
    };
    t.q.assign(static_cast<size_t>(q_len), scaled<R>{});
    t.q[static_cast<size_t>(m + m)] = raise_to_m(m);
    t.q[static_cast<size_t>(m + m + 1)] = raise_to_m(m + 1);
    // ladders in both directions
    for (int v = m + 1; v - 2 >= -m; --v) {
        // F_{v-2} = -(v-m+1) F_v / (v+m-1)  [ladder at v-1]
        t.q[static_cast<size_t>(v - 2 + m)] =
            scaled_mul(t.Q(v), cx<R>(R(static_cast<double>(-(v - m))) / R(static_cast<double>(v + m - 1))));
    }
    for (int v = m + 1; v + 1 < q_len - m; ++v) {
        // F_{v+1} = -(v+m) F_{v-1} / (v-m+1)
        t.q[static_cast<size_t>(v + 1 + m)] =
            scaled_mul(t.Q(v - 1), cx<R>(R(static_cast<double>(-(v + m))) / R(static_cast<double>(v - m + 1))));
    }

    int p_len = nu_max - m + 2;
    t.p.assign(static_cast<size_t>(p_len), scaled<R>{});
    scaled<R> pmm = detail::double_factorial_scaled<R>(2 * m - 1);
    for (int k = 0; k < m; ++k) pmm = scaled_mul(pmm, iunit);
    t.p[0] = pmm;
    for (int v = m + 1; v + 1 <= nu_max + 1; ++v) {
        t.p[static_cast<size_t>(v + 1 - m)] =
            scaled_mul(t.P(v - 1), cx<R>(R(static_cast<double>(-(v + m))) / R(static_cast<double>(v - m + 1))));
    }

    t.dq.assign(static_cast<size_t>(q_len) - 1, scaled<R>{});
    for (int v = -m; v <= nu_max; ++v)
        t.dq[static_cast<size_t>(v + m)] =
            scaled_mul(t.Q(v + 1), cx<R>(R(static_cast<double>(-(v - m + 1)))) * iunit);
    t.dp.assign(static_cast<size_t>(p_len) - 1, scaled<R>{});
    for (int v = m; v <= nu_max; ++v)
        t.dp[static_cast<size_t>(v - m)] =
            scaled_mul(t.P(v + 1), cx<R>(R(static_cast<double>(-(v - m + 1)))) * iunit);
    return t;
}

} // namespace oblate
