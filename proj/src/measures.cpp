#include "gbath/measures.hpp"

#include <algorithm>
#include <cmath>

#include "detail_quad.hpp"

namespace gbath {

using detail::f128;

namespace {

// Physicality gate for the discord family; matches the guarantee evolve()
// provides for its outputs.
constexpr double kPhysicalTol = 1e-8;

// Entropy arguments produced from states that pass the 1e-8 physicality gate
// can sit correspondingly below 1; within the kernel we clamp that band to 1
// instead of erroring (the public entropy_f keeps the strict 1e-12 band).
constexpr double kKernelEntropyTol = 1e-6;

constexpr double kDiscordReportClamp = 1e-10;

struct Mat2q {
    f128 e[2][2];
};

Mat2q mul(const Mat2q& x, const Mat2q& y) {
    Mat2q out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.e[i][j] = x.e[i][0] * y.e[0][j] + x.e[i][1] * y.e[1][j];
    return out;
}

Mat2q block2q(const Eigen::Matrix4d& m, int r, int c) {
    return {{{(f128)m(r, c), (f128)m(r, c + 1)}, {(f128)m(r + 1, c), (f128)m(r + 1, c + 1)}}};
}

// Simon function in quad: det A det B + (1/4 - |det C|)^2
//   - Tr[A J C J B J C^T J] - (det A + det B)/4, with J = [[0,1],[-1,0]].
f128 simon_quad(const Eigen::Matrix4d& m, const detail::QuadInvariants& inv) {
    const Mat2q j = {{{0, 1}, {-1, 0}}};
    const Mat2q a = block2q(m, 0, 0);
    const Mat2q b = block2q(m, 2, 2);
    const Mat2q c = block2q(m, 0, 2);
    const Mat2q ct = {{{c.e[0][0], c.e[1][0]}, {c.e[0][1], c.e[1][1]}}};
    const Mat2q prod = mul(mul(mul(a, j), mul(c, j)), mul(mul(b, j), mul(ct, j)));
    const f128 trace = prod.e[0][0] + prod.e[1][1];
    const f128 quarter = (f128)1 / 4;
    const f128 abs_det_c = inv.det_c < 0 ? -inv.det_c : inv.det_c;
    return inv.det_a * inv.det_b + (quarter - abs_det_c) * (quarter - abs_det_c) - trace -
           quarter * (inv.det_a + inv.det_b);
}

// Production E_N route: g = (det A + det B)/2 - det C
//   - sqrt([(det A + det B)/2 - det C]^2 - det sigma), E_N = -(1/2) log2(4g).
f128 log_negativity_g_route(const detail::QuadInvariants& inv) {
    const f128 h = (inv.det_a + inv.det_b) / 2 - inv.det_c;
    f128 arg = h * h - inv.det_sigma;
    if (arg < 0) {
        if (arg < -(f128)detail::kDiscriminantTol)
            throw NumericalDomainError("log_negativity: inner square root argument below -1e-12");
        arg = 0;
    }
    const f128 g = h - sqrtq(arg);
    if (!(g > 0))
        throw NumericalDomainError("log_negativity: nonpositive argument 4g, state is not valid");
    return -logq(4 * g) / (2 * M_LN2q);
}

f128 log_negativity_nu_route(const detail::QuadInvariants& inv) {
    const auto [lo, hi] = detail::nu_squared_pair(inv.Delta_tilde, inv.det_sigma, "log_negativity");
    (void)hi;
    const f128 nu_tilde_minus = sqrtq(lo);
    if (!(nu_tilde_minus > 0))
        throw NumericalDomainError("log_negativity: vanishing PT symplectic eigenvalue");
    return -logq(2 * nu_tilde_minus) / M_LN2q;
}

f128 checked_log_negativity(const detail::QuadInvariants& inv) {
    const f128 g_route = log_negativity_g_route(inv);
    const f128 nu_route = log_negativity_nu_route(inv);
    if (fabsq(g_route - nu_route) > (f128)1e-10)
        throw NumericalDomainError("log_negativity: g-route and nu-route disagree beyond 1e-10");
    return g_route;
}

f128 epsilon_branch1(f128 alpha, f128 beta, f128 gamma, f128 delta) {
    const f128 denom = (beta - 1) * (beta - 1);
    if (!(denom > 0))
        throw NumericalDomainError("discord: branch-1 epsilon undefined for beta = 1");
    f128 inner = gamma * gamma + (beta - 1) * (delta - alpha);
    if (inner < 0) {
        const f128 scale = gamma * gamma + fabsq((beta - 1) * (delta - alpha)) + 1;
        if (inner < -(f128)1e-12 * scale)
            throw NumericalDomainError("discord: negative square root argument in branch 1");
        inner = 0;
    }
    const f128 abs_gamma = fabsq(gamma);
    return (2 * gamma * gamma + (beta - 1) * (delta - alpha) + 2 * abs_gamma * sqrtq(inner)) /
           denom;
}

f128 epsilon_branch2(f128 alpha, f128 beta, f128 gamma, f128 delta) {
    const f128 g2 = gamma * gamma;
    f128 inner = g2 * g2 + (delta - alpha * beta) * (delta - alpha * beta) -
                 2 * g2 * (delta + alpha * beta);
    if (inner < 0) {
        const f128 scale = g2 * g2 + (delta - alpha * beta) * (delta - alpha * beta) +
                           fabsq(2 * g2 * (delta + alpha * beta)) + 1;
        if (inner < -(f128)1e-12 * scale)
            throw NumericalDomainError("discord: negative square root argument in branch 2");
        inner = 0;
    }
    return (alpha * beta - g2 + delta - sqrtq(inner)) / (2 * beta);
}

f128 measurement_epsilon(const detail::QuadInvariants& inv, EpsilonBranch& branch) {
    const f128 alpha = inv.alpha, beta = inv.beta, gamma = inv.gamma, delta = inv.delta;
    if (gamma * gamma < (f128)1e-24) {
        // gamma = 0 makes both branches the 0/0 limit alpha; shortcut to it.
        branch = EpsilonBranch::product_shortcut;
        return alpha;
    }
    const f128 lhs = (delta - alpha * beta) * (delta - alpha * beta);
    const f128 rhs = (beta + 1) * gamma * gamma * (alpha + delta);
    const f128 scale = std::max(fabsq(lhs), fabsq(rhs));
    if (fabsq(lhs - rhs) <= (f128)1e-12 * scale) {
        // Boundary tie (pure states sit exactly here): both branches must
        // coincide; report branch 1.
        const f128 eps1 = epsilon_branch1(alpha, beta, gamma, delta);
        const f128 eps2 = epsilon_branch2(alpha, beta, gamma, delta);
        const f128 f1 = detail::entropy_f(sqrtq(eps1), false, "discord", kKernelEntropyTol);
        const f128 f2 = detail::entropy_f(sqrtq(eps2), false, "discord", kKernelEntropyTol);
        if (fabsq(f1 - f2) > (f128)1e-9)
            throw NumericalDomainError(
                "discord: epsilon branches disagree beyond 1e-9 at the branch boundary");
        branch = EpsilonBranch::branch1;
        return eps1;
    }
    if (lhs <= rhs) {
        branch = EpsilonBranch::branch1;
        return epsilon_branch1(alpha, beta, gamma, delta);
    }
    branch = EpsilonBranch::branch2;
    return epsilon_branch2(alpha, beta, gamma, delta);
}

struct MeasureBundle {
    detail::QuadInvariants inv;
    f128 nu_bar_minus = 0, nu_bar_plus = 0;
    f128 nu_tilde_minus = 0;
    f128 epsilon = 0;
    EpsilonBranch branch = EpsilonBranch::product_shortcut;
    f128 discord = 0, classical = 0, mutual = 0;
};

MeasureBundle measure_bundle(const CovarianceMatrix& sigma, LogBase base) {
    if (!is_physical(sigma, kPhysicalTol))
        throw InvalidState("measures: covariance matrix is not a physical state");
    const bool base2 = base == LogBase::base2;
    MeasureBundle bundle;
    bundle.inv = detail::quad_invariants(sigma.matrix());
    const auto [lo, hi] = detail::nu_squared_pair(bundle.inv.Delta, bundle.inv.det_sigma, "measures");
    bundle.nu_bar_minus = 2 * sqrtq(lo);
    bundle.nu_bar_plus = 2 * sqrtq(hi);
    bundle.epsilon = measurement_epsilon(bundle.inv, bundle.branch);
    if (bundle.epsilon < 0)
        throw NumericalDomainError("discord: negative measurement parameter epsilon");

    const auto f = [&](f128 x) { return detail::entropy_f(x, base2, "measures", kKernelEntropyTol); };
    const f128 f_sqrt_alpha = f(sqrtq(bundle.inv.alpha));
    const f128 f_sqrt_beta = f(sqrtq(bundle.inv.beta));
    const f128 f_nu_minus = f(bundle.nu_bar_minus);
    const f128 f_nu_plus = f(bundle.nu_bar_plus);
    const f128 f_sqrt_eps = f(sqrtq(bundle.epsilon));

    bundle.discord = f_sqrt_beta - f_nu_minus - f_nu_plus + f_sqrt_eps;
    bundle.classical = f_sqrt_alpha - f_sqrt_eps;
    bundle.mutual = f_sqrt_alpha + f_sqrt_beta - f_nu_minus - f_nu_plus;
    return bundle;
}

}  // namespace

const char* to_string(EpsilonBranch branch) {
    switch (branch) {
        case EpsilonBranch::product_shortcut: return "product_shortcut";
        case EpsilonBranch::branch1: return "branch1";
        case EpsilonBranch::branch2: return "branch2";
    }
    return "unknown";
}

double entropy_f(double x, LogBase base) {
    if (!std::isfinite(x)) throw NumericalDomainError("entropy_f: non-finite argument");
    return detail::to_double(detail::entropy_f((f128)x, base == LogBase::base2, "entropy_f", 1e-12));
}

double simon_s(const CovarianceMatrix& sigma) {
    const detail::QuadInvariants inv = detail::quad_invariants(sigma.matrix());
    return detail::to_double(simon_quad(sigma.matrix(), inv));
}

double log_negativity(const CovarianceMatrix& sigma) {
    const detail::QuadInvariants inv = detail::quad_invariants(sigma.matrix());
    return detail::to_double(checked_log_negativity(inv));
}

DiscordResult gaussian_discord(const CovarianceMatrix& sigma, LogBase base) {
    const MeasureBundle bundle = measure_bundle(sigma, base);
    return {detail::to_double(bundle.discord), bundle.branch};
}

double classical_correlations(const CovarianceMatrix& sigma, LogBase base) {
    return detail::to_double(measure_bundle(sigma, base).classical);
}

double mutual_information(const CovarianceMatrix& sigma, LogBase base) {
    return detail::to_double(measure_bundle(sigma, base).mutual);
}

CorrelationReport correlation_report(const CovarianceMatrix& sigma, LogBase base) {
    const MeasureBundle bundle = measure_bundle(sigma, base);
    CorrelationReport report;
    report.simon_s = detail::to_double(simon_quad(sigma.matrix(), bundle.inv));
    report.log_negativity = detail::to_double(checked_log_negativity(bundle.inv));
    report.discord_raw = detail::to_double(bundle.discord);
    report.discord = (report.discord_raw < 0.0 && report.discord_raw >= -kDiscordReportClamp)
                         ? 0.0
                         : report.discord_raw;
    report.classical = detail::to_double(bundle.classical);
    report.mutual_information = detail::to_double(bundle.mutual);
    report.epsilon_branch = bundle.branch;
    report.nu_bar_minus = detail::to_double(bundle.nu_bar_minus);
    const auto pt = detail::nu_squared_pair(bundle.inv.Delta_tilde, bundle.inv.det_sigma, "report");
    report.nu_tilde_minus = detail::to_double(sqrtq(pt.first));
    return report;
}

double asymptotic_simon(const SystemParams& params, Temperature T) {
    params.validate();
    const double c1 = thermal_coth(params.omega1, T);
    const double c2 = thermal_coth(params.omega2, T);
    return (c1 * c1 - 1.0) * (c2 * c2 - 1.0) / 16.0;
}

double asymptotic_log_negativity(const SystemParams& params, Temperature T) {
    params.validate();
    const double coth = thermal_coth(std::max(params.omega1, params.omega2), T);
    const double value = -std::log2(coth);
    return value == 0.0 ? 0.0 : value;  // normalize -0
}

}  // namespace gbath
