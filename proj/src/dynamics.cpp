#include "gbath/dynamics.hpp"

#include <cmath>
#include <string>

namespace gbath {

double thermal_coth(double omega, Temperature T) {
    if (T.value == 0.0) return 1.0;
    const double x = omega / (2.0 * T.value);
    if (x > 20.0) return 1.0 + 2.0 * std::exp(-2.0 * x);
    return 1.0 / std::tanh(x);
}

DriftMatrix drift_matrix(const SystemParams& params) {
    params.validate();
    Eigen::Matrix4d y = Eigen::Matrix4d::Zero();
    const double omegas[2] = {params.omega1, params.omega2};
    for (int mode = 0; mode < 2; ++mode) {
        const int i = 2 * mode;
        y(i, i) = -params.lambda;
        y(i, i + 1) = 1.0 / params.mass;
        y(i + 1, i) = -params.mass * omegas[mode] * omegas[mode];
        y(i + 1, i + 1) = -params.lambda;
    }
    return DriftMatrix(y);
}

DiffusionMatrix thermal_diffusion(const SystemParams& params, Temperature T) {
    params.validate();
    const double half_lambda = params.lambda / 2.0;
    Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
    const double omegas[2] = {params.omega1, params.omega2};
    for (int mode = 0; mode < 2; ++mode) {
        const int i = 2 * mode;
        const double coth = thermal_coth(omegas[mode], T);
        const double m_omega = params.mass * omegas[mode];
        d(i, i) = half_lambda * coth / m_omega;
        d(i + 1, i + 1) = half_lambda * coth * m_omega;
    }
    return DiffusionMatrix::from_matrix(d);
}

DiffusionValidity validate_diffusion(const DiffusionMatrix& d, double lambda, double tol) {
    if (!std::isfinite(lambda) || lambda < 0.0)
        throw InvalidParameter("validate_diffusion: lambda must be finite and >= 0");
    if (!std::isfinite(tol) || tol < 0.0)
        throw InvalidParameter("validate_diffusion: tol must be finite and >= 0");
    const double quarter_lambda_sq = (lambda / 2.0) * (lambda / 2.0);
    DiffusionValidity report;
    report.tol = tol;
    report.inequalities = {{
        {"D_xx D_pxpx - D_xpx^2 >= lambda^2/4",
         d.d_xx() * d.d_pxpx() - d.d_xpx() * d.d_xpx() - quarter_lambda_sq},
        {"D_yy D_pypy - D_ypy^2 >= lambda^2/4",
         d.d_yy() * d.d_pypy() - d.d_ypy() * d.d_ypy() - quarter_lambda_sq},
        {"D_xx D_yy - D_xy^2 >= 0", d.d_xx() * d.d_yy() - d.d_xy() * d.d_xy()},
        {"D_pxpx D_pypy - D_pxpy^2 >= 0", d.d_pxpx() * d.d_pypy() - d.d_pxpy() * d.d_pxpy()},
        {"D_xx D_pypy - D_xpy^2 >= 0", d.d_xx() * d.d_pypy() - d.d_xpy() * d.d_xpy()},
        {"D_yy D_pxpx - D_ypx^2 >= 0", d.d_yy() * d.d_pxpx() - d.d_ypx() * d.d_ypx()},
    }};
    report.pass = true;
    for (const auto& ineq : report.inequalities)
        if (!(ineq.margin >= -tol)) report.pass = false;
    return report;
}

namespace {

void require_time(double t, const char* context) {
    if (!std::isfinite(t) || t < 0.0)
        throw InvalidParameter(std::string(context) + ": time must be finite and >= 0, got " +
                               std::to_string(t));
}

}  // namespace

Eigen::Matrix4d propagator(const SystemParams& params, double t) {
    params.validate();
    require_time(t, "propagator");
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    const double damp = std::exp(-params.lambda * t);
    const double omegas[2] = {params.omega1, params.omega2};
    for (int mode = 0; mode < 2; ++mode) {
        const int i = 2 * mode;
        const double omega = omegas[mode];
        const double c = damp * std::cos(omega * t);
        const double s = damp * std::sin(omega * t);
        m(i, i) = c;
        m(i, i + 1) = s / (params.mass * omega);
        m(i + 1, i) = -params.mass * omega * s;
        m(i + 1, i + 1) = c;
    }
    return m;
}

CovarianceMatrix steady_state(const SystemParams& params, Temperature T) {
    params.validate();
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    const double omegas[2] = {params.omega1, params.omega2};
    for (int mode = 0; mode < 2; ++mode) {
        const int i = 2 * mode;
        const double half_coth = 0.5 * thermal_coth(omegas[mode], T);
        const double m_omega = params.mass * omegas[mode];
        m(i, i) = half_coth / m_omega;
        m(i + 1, i + 1) = half_coth * m_omega;
    }
    return CovarianceMatrix::from_matrix(m);
}

CovarianceMatrix evolve(const CovarianceMatrix& sigma0, const SystemParams& params, Temperature T,
                        double t) {
    params.validate();
    require_time(t, "evolve");
    if (!is_physical(sigma0, 1e-8))
        throw InvalidState("evolve: initial covariance matrix is not a physical state");
    const Eigen::Matrix4d m = propagator(params, t);
    const Eigen::Matrix4d inf = steady_state(params, T).matrix();
    const Eigen::Matrix4d result = m * (sigma0.matrix() - inf) * m.transpose() + inf;
    return CovarianceMatrix::from_matrix(result);
}

}  // namespace gbath
