#pragma once

#include <Eigen/Dense>

#include "gbath/params.hpp"

namespace gbath {

// 4x4 covariance matrix of a two-mode Gaussian state over the ordered
// quadrature basis (x, p_x, y, p_y). Convention: vacuum = (1/2) * identity.
// Storage is symmetrized on construction, so sigma(i,j) == sigma(j,i) holds
// bit-exactly for every instance.
class CovarianceMatrix {
public:
    CovarianceMatrix() : entries_(0.5 * Eigen::Matrix4d::Identity()) {}

    // Accepts any 4x4 matrix and stores (m + m^T)/2.
    static CovarianceMatrix from_matrix(const Eigen::Matrix4d& m) {
        CovarianceMatrix sigma;
        sigma.entries_ = 0.5 * (m + m.transpose());
        return sigma;
    }

    static CovarianceMatrix vacuum() { return CovarianceMatrix(); }

    const Eigen::Matrix4d& matrix() const { return entries_; }
    double operator()(int i, int j) const { return entries_(i, j); }

private:
    Eigen::Matrix4d entries_;
};

// Reduced one-mode blocks A, B and the cross-correlation block C of
// sigma = [[A, C], [C^T, B]].
struct Blocks {
    Eigen::Matrix2d a;
    Eigen::Matrix2d b;
    Eigen::Matrix2d c;
};

// Local symplectic invariants. alpha..delta are the doubled-convention
// determinants (vacuum: alpha = beta = delta = 1); Delta and Delta_tilde stay
// on the raw determinant scale (vacuum: 1/2).
struct SymplecticInvariants {
    double alpha;        // 4 det A
    double beta;         // 4 det B
    double gamma;        // 4 det C
    double delta;        // 16 det sigma
    double Delta;        // det A + det B + 2 det C
    double Delta_tilde;  // det A + det B - 2 det C (invariant of the partial transpose)
};

struct SymplecticSpectrum {
    double minus;
    double plus;
};

// --- initial-state constructors ---

// Product of two identically squeezed single modes; cross block C = 0.
CovarianceMatrix separable_squeezed_state(Squeezing r);

// Two-mode squeezed vacuum; pure (16 det sigma = 1), det C < 0 for r > 0.
CovarianceMatrix two_mode_squeezed_state(Squeezing r);

// --- decomposition and invariants ---

Blocks block_decompose(const CovarianceMatrix& sigma);
CovarianceMatrix assemble_blocks(const Blocks& blocks);

SymplecticInvariants symplectic_invariants(const CovarianceMatrix& sigma);

// Symplectic eigenvalues in the doubled convention nu_bar = 2 nu;
// physical states satisfy 1 <= minus <= plus. Throws NumericalDomainError if
// the discriminant Delta^2 - 4 det sigma falls below -1e-12.
SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& sigma);

// Symplectic eigenvalues of the partial transpose, in the half convention of
// E_N = -log2(2 nu_tilde_minus); vacuum -> (1/2, 1/2).
SymplecticSpectrum pt_symplectic_eigenvalues(const CovarianceMatrix& sigma);

// Robertson-Schrodinger validity gate: nu_bar_minus >= 1 - tol and positive
// definite diagonal blocks. Never throws; any failed check returns false.
bool is_physical(const CovarianceMatrix& sigma, double tol);

}  // namespace gbath
