#include "gbath/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace gbath::oracle {

Eigen::Matrix4d expm_generic(const Eigen::Matrix4d& m) {
    if (!m.allFinite()) throw InvalidParameter("expm_generic: non-finite input");
    const double norm = m.cwiseAbs().maxCoeff() * 4.0;  // cheap upper bound on the 1-norm
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.5 && squarings < 64) {
        scale *= 0.5;
        ++squarings;
    }
    const Eigen::Matrix4d a = m * scale;
    Eigen::Matrix4d result = Eigen::Matrix4d::Identity();
    Eigen::Matrix4d term = Eigen::Matrix4d::Identity();
    for (int k = 1; k <= 40; ++k) {
        term = (term * a) / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-25) break;
    }
    for (int k = 0; k < squarings; ++k) result = result * result;
    return result;
}

Eigen::Matrix4d rk4_evolve(const Eigen::Matrix4d& sigma0, const Eigen::Matrix4d& drift,
                           const Eigen::Matrix4d& diffusion, double t,
                           const IntegratorConfig& cfg) {
    if (!std::isfinite(t) || t < 0.0)
        throw InvalidParameter("rk4_evolve: time must be finite and >= 0");
    if (!std::isfinite(cfg.step) || cfg.step <= 0.0)
        throw InvalidParameter("rk4_evolve: step must be finite and > 0");
    if (t == 0.0) return 0.5 * (sigma0 + sigma0.transpose());
    if (cfg.step > t)
        throw InvalidParameter("rk4_evolve: step " + std::to_string(cfg.step) +
                               " exceeds total time " + std::to_string(t));

    const auto rhs = [&](const Eigen::Matrix4d& s) -> Eigen::Matrix4d {
        return drift * s + s * drift.transpose() + 2.0 * diffusion;
    };

    const auto steps = static_cast<std::int64_t>(std::ceil(t / cfg.step - 1e-12));
    const double h = t / static_cast<double>(steps);
    Eigen::Matrix4d s = sigma0;
    for (std::int64_t i = 0; i < steps; ++i) {
        const Eigen::Matrix4d k1 = rhs(s);
        const Eigen::Matrix4d k2 = rhs(s + 0.5 * h * k1);
        const Eigen::Matrix4d k3 = rhs(s + 0.5 * h * k2);
        const Eigen::Matrix4d k4 = rhs(s + h * k3);
        s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return 0.5 * (s + s.transpose());
}

Eigen::Matrix4d lyapunov_solve(const Eigen::Matrix4d& drift, const Eigen::Matrix4d& diffusion) {
    if (!drift.allFinite() || !diffusion.allFinite())
        throw InvalidParameter("lyapunov_solve: non-finite input");
    // Column stacking: vec(Y s) = (I (x) Y) vec(s), vec(s Y^T) = (Y (x) I) vec(s).
    Eigen::Matrix<double, 16, 16> k = Eigen::Matrix<double, 16, 16>::Zero();
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            const int row = i + 4 * j;
            for (int l = 0; l < 4; ++l) {
                k(row, l + 4 * j) += drift(i, l);
                k(row, i + 4 * l) += drift(j, l);
            }
        }
    Eigen::Matrix<double, 16, 1> b;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) b(i + 4 * j) = -2.0 * diffusion(i, j);

    Eigen::FullPivLU<Eigen::Matrix<double, 16, 16>> lu(k);
    if (!lu.isInvertible())
        throw NumericalDomainError("lyapunov_solve: singular system (drift matrix not stable)");
    const Eigen::Matrix<double, 16, 1> x = lu.solve(b);
    Eigen::Matrix4d s;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) s(i, j) = x(i + 4 * j);
    return s;
}

}  // namespace gbath::oracle
