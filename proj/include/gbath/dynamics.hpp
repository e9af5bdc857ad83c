#pragma once

#include <array>

#include <Eigen/Dense>

#include "gbath/covariance.hpp"
#include "gbath/params.hpp"

namespace gbath {

// Drift matrix Y of d sigma/dt = Y sigma + sigma Y^T + 2 D. Block-diagonal,
// one [[-lambda, 1/m], [-m w^2, -lambda]] block per mode; every eigenvalue has
// real part -lambda < 0.
class DriftMatrix {
public:
    explicit DriftMatrix(const Eigen::Matrix4d& m) : entries_(m) {}
    const Eigen::Matrix4d& matrix() const { return entries_; }

private:
    Eigen::Matrix4d entries_;
};

// Symmetric 4x4 matrix of environment diffusion coefficients.
class DiffusionMatrix {
public:
    DiffusionMatrix() : entries_(Eigen::Matrix4d::Zero()) {}
    static DiffusionMatrix from_matrix(const Eigen::Matrix4d& m) {
        DiffusionMatrix d;
        d.entries_ = 0.5 * (m + m.transpose());
        return d;
    }
    const Eigen::Matrix4d& matrix() const { return entries_; }

    double d_xx() const { return entries_(0, 0); }
    double d_xpx() const { return entries_(0, 1); }
    double d_xy() const { return entries_(0, 2); }
    double d_xpy() const { return entries_(0, 3); }
    double d_pxpx() const { return entries_(1, 1); }
    double d_ypx() const { return entries_(1, 2); }
    double d_pxpy() const { return entries_(1, 3); }
    double d_yy() const { return entries_(2, 2); }
    double d_ypy() const { return entries_(2, 3); }
    double d_pypy() const { return entries_(3, 3); }

private:
    Eigen::Matrix4d entries_;
};

// One Cauchy-Schwarz inequality of the diffusion-coefficient matrix,
// reported as lhs - rhs (pass means margin >= -tol).
struct DiffusionInequality {
    const char* name;
    double margin;
};

struct DiffusionValidity {
    std::array<DiffusionInequality, 6> inequalities;
    double tol;
    bool pass;
};

// coth(omega / (2T)) with the T = 0 limit returned as exactly 1 and a stable
// expansion 1 + 2 exp(-omega/T) once omega/(2T) > 20.
double thermal_coth(double omega, Temperature T);

DriftMatrix drift_matrix(const SystemParams& params);

// Diagonal thermal diffusion matrix: m w D_xx = D_pxpx / (m w) = (lambda/2) coth(w/2T)
// per mode; all cross coefficients vanish.
DiffusionMatrix thermal_diffusion(const SystemParams& params, Temperature T);

DiffusionValidity validate_diffusion(const DiffusionMatrix& d, double lambda, double tol);

// Closed-form propagator M(t) = exp(Y t): per mode block
// e^{-lambda t} (cos(w t) I + sin(w t) [[0, 1/(m w)], [-m w, 0]]).
Eigen::Matrix4d propagator(const SystemParams& params, double t);

// Thermal (Gibbs) steady state: product of two thermal modes with
// m w sigma_xx = sigma_pxpx / (m w) = (1/2) coth(w/2T) and zero cross block.
CovarianceMatrix steady_state(const SystemParams& params, Temperature T);

// sigma(t) = M(t) [sigma(0) - sigma(inf)] M(t)^T + sigma(inf), symmetrized.
CovarianceMatrix evolve(const CovarianceMatrix& sigma0, const SystemParams& params, Temperature T,
                        double t);

}  // namespace gbath
