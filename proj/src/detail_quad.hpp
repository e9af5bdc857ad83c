#pragma once

// Internal quad-precision kernels. The determinant combinations behind the
// symplectic invariants cancel catastrophically near pure states (the entropy
// function has a log-singular derivative there), so everything between raw
// double entries and the returned double results runs in __float128.

#include <quadmath.h>

#include <cstdio>
#include <utility>

#include <Eigen/Dense>

#include "gbath/errors.hpp"

namespace gbath::detail {

using f128 = __float128;

inline f128 det2(f128 a00, f128 a01, f128 a10, f128 a11) {
    return a00 * a11 - a01 * a10;
}

inline f128 det3(f128 a, f128 b, f128 c, f128 d, f128 e, f128 f, f128 g, f128 h, f128 i) {
    return a * det2(e, f, h, i) - b * det2(d, f, g, i) + c * det2(d, e, g, h);
}

inline f128 det4(const Eigen::Matrix4d& m) {
    f128 q[4][4];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) q[r][c] = m(r, c);
    f128 out = 0;
    for (int c = 0; c < 4; ++c) {
        const int c1 = (c == 0) ? 1 : 0;
        const int c2 = (c <= 1) ? 2 : 1;
        const int c3 = (c <= 2) ? 3 : 2;
        f128 minor = det3(q[1][c1], q[1][c2], q[1][c3], q[2][c1], q[2][c2], q[2][c3], q[3][c1],
                          q[3][c2], q[3][c3]);
        out += ((c % 2 == 0) ? q[0][c] : -q[0][c]) * minor;
    }
    return out;
}

struct QuadInvariants {
    f128 det_a;
    f128 det_b;
    f128 det_c;
    f128 det_sigma;
    f128 alpha;        // 4 det A
    f128 beta;         // 4 det B
    f128 gamma;        // 4 det C
    f128 delta;        // 16 det sigma
    f128 Delta;        // det A + det B + 2 det C
    f128 Delta_tilde;  // det A + det B - 2 det C
};

inline QuadInvariants quad_invariants(const Eigen::Matrix4d& m) {
    QuadInvariants inv;
    inv.det_a = det2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
    inv.det_b = det2(m(2, 2), m(2, 3), m(3, 2), m(3, 3));
    inv.det_c = det2(m(0, 2), m(0, 3), m(1, 2), m(1, 3));
    inv.det_sigma = det4(m);
    inv.alpha = 4 * inv.det_a;
    inv.beta = 4 * inv.det_b;
    inv.gamma = 4 * inv.det_c;
    inv.delta = 16 * inv.det_sigma;
    inv.Delta = inv.det_a + inv.det_b + 2 * inv.det_c;
    inv.Delta_tilde = inv.det_a + inv.det_b - 2 * inv.det_c;
    return inv;
}

// Discriminants sitting exactly on zero (pure states) wander slightly negative
// in floating point; [-1e-12, 0] snaps to 0, anything lower is a hard error.
inline constexpr double kDiscriminantTol = 1e-12;

// nu^2 pair from 2 nu^2 = D -+ sqrt(D^2 - 4 det sigma), raw determinant scale.
inline std::pair<f128, f128> nu_squared_pair(f128 big_delta, f128 det_sigma, const char* context) {
    f128 disc = big_delta * big_delta - 4 * det_sigma;
    if (disc < 0) {
        if (disc < -(f128)kDiscriminantTol) {
            char msg[256];
            std::snprintf(msg, sizeof msg,
                          "%s: discriminant %.6e < -1e-12 (Delta-like invariant %.17g, det sigma "
                          "%.17g)",
                          context, (double)disc, (double)big_delta, (double)det_sigma);
            throw NumericalDomainError(msg);
        }
        disc = 0;
    }
    const f128 root = sqrtq(disc);
    f128 lo = (big_delta - root) / 2;
    f128 hi = (big_delta + root) / 2;
    if (lo < 0) lo = 0;
    if (hi < 0) hi = 0;
    return {lo, hi};
}

// f(x) = ((x+1)/2) log((x+1)/2) - ((x-1)/2) log((x-1)/2) for x >= 1, with the
// x -> 1 limit taken as 0. base2 divides by log 2. Arguments in
// [1 - clamp_tol, 1) clamp to 1; lower is a domain error.
inline f128 entropy_f(f128 x, bool base2, const char* context, double clamp_tol) {
    if (x < 1) {
        if (x < 1 - (f128)clamp_tol) {
            char msg[128];
            std::snprintf(msg, sizeof msg, "%s: entropy argument %.17g below 1", context,
                          (double)x);
            throw NumericalDomainError(msg);
        }
        x = 1;
    }
    if (x == 1) return 0;
    const f128 p = (x + 1) / 2;
    const f128 q = (x - 1) / 2;
    f128 value = p * logq(p) - q * logq(q);
    if (base2) value /= M_LN2q;
    return value;
}

inline double to_double(f128 v) { return static_cast<double>(v); }

}  // namespace gbath::detail
