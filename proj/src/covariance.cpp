#include "gbath/covariance.hpp"

#include <cmath>

#include "detail_quad.hpp"

namespace gbath {

CovarianceMatrix separable_squeezed_state(Squeezing r) {
    const double c = 0.5 * std::cosh(r.value);
    const double s = 0.5 * std::sinh(r.value);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = c;
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = c;
    m(2, 2) = c;
    m(2, 3) = s;
    m(3, 2) = s;
    m(3, 3) = c;
    return CovarianceMatrix::from_matrix(m);
}

CovarianceMatrix two_mode_squeezed_state(Squeezing r) {
    const double c = 0.5 * std::cosh(r.value);
    const double s = 0.5 * std::sinh(r.value);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m.diagonal().setConstant(c);
    m(0, 2) = s;
    m(2, 0) = s;
    m(1, 3) = -s;
    m(3, 1) = -s;
    return CovarianceMatrix::from_matrix(m);
}

Blocks block_decompose(const CovarianceMatrix& sigma) {
    const Eigen::Matrix4d& m = sigma.matrix();
    Blocks blocks;
    blocks.a = m.topLeftCorner<2, 2>();
    blocks.b = m.bottomRightCorner<2, 2>();
    blocks.c = m.topRightCorner<2, 2>();
    return blocks;
}

CovarianceMatrix assemble_blocks(const Blocks& blocks) {
    Eigen::Matrix4d m;
    m.topLeftCorner<2, 2>() = blocks.a;
    m.bottomRightCorner<2, 2>() = blocks.b;
    m.topRightCorner<2, 2>() = blocks.c;
    m.bottomLeftCorner<2, 2>() = blocks.c.transpose();
    return CovarianceMatrix::from_matrix(m);
}

SymplecticInvariants symplectic_invariants(const CovarianceMatrix& sigma) {
    const detail::QuadInvariants q = detail::quad_invariants(sigma.matrix());
    SymplecticInvariants inv;
    inv.alpha = detail::to_double(q.alpha);
    inv.beta = detail::to_double(q.beta);
    inv.gamma = detail::to_double(q.gamma);
    inv.delta = detail::to_double(q.delta);
    inv.Delta = detail::to_double(q.Delta);
    inv.Delta_tilde = detail::to_double(q.Delta_tilde);
    return inv;
}

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& sigma) {
    const detail::QuadInvariants q = detail::quad_invariants(sigma.matrix());
    const auto [lo, hi] = detail::nu_squared_pair(q.Delta, q.det_sigma, "symplectic_eigenvalues");
    // doubled convention: nu_bar^2 = 4 nu^2
    return {detail::to_double(2 * sqrtq(lo)), detail::to_double(2 * sqrtq(hi))};
}

SymplecticSpectrum pt_symplectic_eigenvalues(const CovarianceMatrix& sigma) {
    const detail::QuadInvariants q = detail::quad_invariants(sigma.matrix());
    const auto [lo, hi] =
        detail::nu_squared_pair(q.Delta_tilde, q.det_sigma, "pt_symplectic_eigenvalues");
    return {detail::to_double(sqrtq(lo)), detail::to_double(sqrtq(hi))};
}

bool is_physical(const CovarianceMatrix& sigma, double tol) {
    if (!(tol >= 0.0) || !sigma.matrix().allFinite()) return false;
    const Eigen::Matrix4d& m = sigma.matrix();
    // positive definite 2x2 blocks: leading entry and determinant both > 0
    const double det_a = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double det_b = m(2, 2) * m(3, 3) - m(2, 3) * m(3, 2);
    if (!(m(0, 0) > 0.0) || !(det_a > 0.0)) return false;
    if (!(m(2, 2) > 0.0) || !(det_b > 0.0)) return false;
    try {
        return symplectic_eigenvalues(sigma).minus >= 1.0 - tol;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace gbath
