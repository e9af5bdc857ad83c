#pragma once

#include "gbath/covariance.hpp"
#include "gbath/dynamics.hpp"
#include "gbath/params.hpp"

namespace gbath {

// Logarithm base of the entropy function f. The logarithmic negativity is
// always base 2 regardless of this choice.
enum class LogBase { natural, base2 };

// Which branch produced the measurement parameter epsilon of the Gaussian
// discord. product_shortcut means gamma^2 < 1e-24, where epsilon = alpha
// exactly and both discord and classical correlations vanish.
enum class EpsilonBranch { product_shortcut, branch1, branch2 };

const char* to_string(EpsilonBranch branch);

// f(x) = ((x+1)/2) log((x+1)/2) - ((x-1)/2) log((x-1)/2), defined for x >= 1
// with f(1) = 0. Arguments in [1 - 1e-12, 1) clamp to 1; below that is a
// numerical-domain error. Consumes doubled symplectic eigenvalues.
double entropy_f(double x, LogBase base);

// Simon separability function; S >= 0 iff the (physical Gaussian) state is
// separable. No physicality gate: any 4x4 covariance matrix is accepted.
double simon_s(const CovarianceMatrix& sigma);

// Logarithmic negativity E_N = -(1/2) log2(4 g(sigma)), positive iff
// entangled. Internally cross-checked against -log2(2 nu_tilde_minus).
double log_negativity(const CovarianceMatrix& sigma);

struct DiscordResult {
    double value;  // raw, may round off slightly negative on product states
    EpsilonBranch branch;
};

// Gaussian quantum discord with the conditional entropy minimized over
// Gaussian measurements on mode 2. Requires a physical state.
DiscordResult gaussian_discord(const CovarianceMatrix& sigma, LogBase base);

// C = f(sqrt(alpha)) - f(sqrt(epsilon)); zero for product states.
double classical_correlations(const CovarianceMatrix& sigma, LogBase base);

// I = f(sqrt(alpha)) + f(sqrt(beta)) - f(nu_bar_minus) - f(nu_bar_plus);
// satisfies I = C + D identically.
double mutual_information(const CovarianceMatrix& sigma, LogBase base);

// All quantifiers of one state, computed from a single set of invariants.
struct CorrelationReport {
    double simon_s;
    double log_negativity;
    double discord;  // clamped: raw values in [-1e-10, 0] are reported as 0
    double classical;
    double mutual_information;
    EpsilonBranch epsilon_branch;
    // diagnostics
    double nu_bar_minus;
    double nu_tilde_minus;
    double discord_raw;
};

CorrelationReport correlation_report(const CovarianceMatrix& sigma, LogBase base);

// S(infinity) = (1/16) (coth^2(w1/2T) - 1)(coth^2(w2/2T) - 1); always >= 0.
double asymptotic_simon(const SystemParams& params, Temperature T);

// E_N(infinity) = -log2 coth(w_max/2T); zero iff T = 0, negative otherwise.
double asymptotic_log_negativity(const SystemParams& params, Temperature T);

}  // namespace gbath
