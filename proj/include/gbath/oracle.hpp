#pragma once

// Independent numerical cross-checks for the closed-form dynamics: a generic
// matrix exponential, fixed-step RK4 integration of the covariance ODE, and a
// vectorized linear solve of the continuous Lyapunov equation. Compiled into
// its own library that only the test suites link; nothing on the production
// path calls into this namespace.

#include <Eigen/Dense>

#include "gbath/errors.hpp"

namespace gbath::oracle {

struct IntegratorConfig {
    double step = 1e-4;
};

// Scaling-and-squaring exponential with a truncated Taylor series.
Eigen::Matrix4d expm_generic(const Eigen::Matrix4d& m);

// Classic fixed-step RK4 for d sigma/dt = Y sigma + sigma Y^T + 2 D.
// Requires cfg.step <= t for t > 0; the result is symmetrized.
Eigen::Matrix4d rk4_evolve(const Eigen::Matrix4d& sigma0, const Eigen::Matrix4d& drift,
                           const Eigen::Matrix4d& diffusion, double t, const IntegratorConfig& cfg);

// Solves Y sigma + sigma Y^T = -2 D as a 16x16 linear system.
// Throws NumericalDomainError when the system is singular (unstable drift).
Eigen::Matrix4d lyapunov_solve(const Eigen::Matrix4d& drift, const Eigen::Matrix4d& diffusion);

}  // namespace gbath::oracle
