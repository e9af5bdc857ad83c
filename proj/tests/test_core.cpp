#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gbath/covariance.hpp"
#include "test_support.hpp"

using namespace gbath;
using gbath::test::near;

TEST_CASE("separable squeezed state matches its closed form") {
    SUBCASE("r = 0 is the vacuum") {
        const auto sigma = separable_squeezed_state(Squeezing(0.0));
        CHECK((sigma.matrix() - 0.5 * Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("r = 4 entries") {
        const auto sigma = separable_squeezed_state(Squeezing(4.0));
        // 1-ulp slack: the compiler may constant-fold cosh/sinh of a literal
        CHECK(near(sigma(0, 0), 0.5 * std::cosh(4.0), 1e-13));
        CHECK(near(sigma(0, 1), 0.5 * std::sinh(4.0), 1e-13));
        CHECK(near(sigma(2, 3), 0.5 * std::sinh(4.0), 1e-13));
        CHECK(sigma.matrix().topRightCorner<2, 2>().cwiseAbs().maxCoeff() == 0.0);
        CHECK(near(sigma(0, 0), 13.65411641800824, 1e-11));
        CHECK(near(sigma(0, 1), 13.64495859856388, 1e-11));
    }
    SUBCASE("block determinants: det A = det B = 1/4, det C = 0 for any r") {
        // brute-force determinants, independent of the invariant pipeline
        for (double r : {0.0, 0.7, 2.0, 4.0}) {
            const auto blocks = block_decompose(separable_squeezed_state(Squeezing(r)));
            CHECK(near(blocks.a.determinant(), 0.25, 1e-12));
            CHECK(near(blocks.b.determinant(), 0.25, 1e-12));
            CHECK(blocks.c.determinant() == 0.0);
        }
    }
    SUBCASE("invalid parameter") {
        CHECK_THROWS_AS(Squeezing(-1.0), InvalidParameter);
        CHECK_THROWS_AS(Squeezing(std::nan("")), InvalidParameter);
        CHECK_THROWS_AS(Squeezing(std::numeric_limits<double>::infinity()), InvalidParameter);
    }
}

TEST_CASE("two-mode squeezed state matches its closed form") {
    SUBCASE("r = 0 is the vacuum") {
        const auto sigma = two_mode_squeezed_state(Squeezing(0.0));
        CHECK((sigma.matrix() - 0.5 * Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("r = 4: det C = -sinh^2(4)/4 < 0") {
        const auto blocks = block_decompose(two_mode_squeezed_state(Squeezing(4.0)));
        CHECK(near(blocks.c.determinant(), -186.18489515652226, 1e-9));
        CHECK(near(blocks.c(0, 0), 0.5 * std::sinh(4.0), 1e-13));
        CHECK(near(blocks.c(1, 1), -0.5 * std::sinh(4.0), 1e-13));
    }
    SUBCASE("purity: 16 det sigma = 1 for any r (brute-force 4x4 determinant)") {
        for (double r : {0.0, 0.5, 1.0, 2.0, 4.0}) {
            const auto sigma = two_mode_squeezed_state(Squeezing(r));
            CHECK(near(16.0 * sigma.matrix().determinant(), 1.0, 1e-10));
        }
    }
}

TEST_CASE("block decomposition round-trips bit-exactly") {
    test::RandomStates gen;
    for (int i = 0; i < 50; ++i) {
        const CovarianceMatrix sigma = gen.next();
        const CovarianceMatrix back = assemble_blocks(block_decompose(sigma));
        CHECK((sigma.matrix() - back.matrix()).cwiseAbs().maxCoeff() == 0.0);
    }
    const auto sep = separable_squeezed_state(Squeezing(1.5));
    CHECK(block_decompose(sep).c.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("symplectic invariants") {
    SUBCASE("vacuum") {
        const auto inv = symplectic_invariants(CovarianceMatrix::vacuum());
        CHECK(inv.alpha == 1.0);
        CHECK(inv.beta == 1.0);
        CHECK(inv.gamma == 0.0);
        CHECK(inv.delta == 1.0);
        CHECK(inv.Delta == 0.5);
        CHECK(inv.Delta_tilde == 0.5);
    }
    SUBCASE("two-mode squeezed, r = 4") {
        const auto inv = symplectic_invariants(two_mode_squeezed_state(Squeezing(4.0)));
        CHECK(near(inv.alpha, 745.7395806260890, 1e-9));
        CHECK(near(inv.beta, 745.7395806260890, 1e-9));
        CHECK(near(inv.gamma, -744.7395806260890, 1e-9));
        CHECK(near(inv.delta, 1.0, 1e-10));
    }
    SUBCASE("separable squeezed: Delta = Delta_tilde = 1/2, delta = 1") {
        for (double r : {0.3, 1.0, 4.0}) {
            const auto inv = symplectic_invariants(separable_squeezed_state(Squeezing(r)));
            CHECK(near(inv.Delta, 0.5, 1e-12));
            CHECK(near(inv.Delta_tilde, 0.5, 1e-12));
            CHECK(near(inv.delta, 1.0, 1e-10));
        }
    }
    SUBCASE("Delta - Delta_tilde = 4 det C") {
        test::RandomStates gen;
        for (int i = 0; i < 100; ++i) {
            const CovarianceMatrix sigma = gen.next();
            const auto inv = symplectic_invariants(sigma);
            const double det_c = block_decompose(sigma).c.determinant();
            CHECK(near(inv.Delta - inv.Delta_tilde, 4.0 * det_c, 1e-9 * (1.0 + std::abs(det_c))));
        }
    }
    SUBCASE("det(-C) = det C for 2x2 blocks") {
        test::RandomStates gen;
        for (int i = 0; i < 20; ++i) {
            const Eigen::Matrix2d c = block_decompose(gen.next()).c;
            CHECK(c.determinant() == (-c).determinant());
        }
    }
}

TEST_CASE("symplectic eigenvalues (doubled convention)") {
    SUBCASE("vacuum -> (1, 1)") {
        const auto nu = symplectic_eigenvalues(CovarianceMatrix::vacuum());
        CHECK(nu.minus == 1.0);
        CHECK(nu.plus == 1.0);
    }
    SUBCASE("pure two-mode squeezed -> (1, 1)") {
        for (double r : {0.5, 2.0, 4.0}) {
            const auto nu = symplectic_eigenvalues(two_mode_squeezed_state(Squeezing(r)));
            CHECK(near(nu.minus, 1.0, 1e-10));
            CHECK(near(nu.plus, 1.0, 1e-10));
        }
    }
    SUBCASE("isotropic thermal product: nu_bar = 2a") {
        const double a = 1.082;
        Eigen::Matrix4d m = Eigen::Matrix4d::Identity() * a;
        const auto nu = symplectic_eigenvalues(CovarianceMatrix::from_matrix(m));
        CHECK(near(nu.minus, 2.0 * a, 1e-12));
        CHECK(near(nu.plus, 2.0 * a, 1e-12));
    }
    SUBCASE("product identity: nu_minus * nu_plus = sqrt(delta)") {
        test::RandomStates gen;
        for (int i = 0; i < 1000; ++i) {
            const CovarianceMatrix sigma = gen.next();
            const auto nu = symplectic_eigenvalues(sigma);
            const double delta = symplectic_invariants(sigma).delta;
            CHECK(near(nu.minus * nu.plus, std::sqrt(delta), 1e-9 * (1.0 + std::sqrt(delta))));
            CHECK(nu.minus <= nu.plus);
        }
    }
    SUBCASE("hard discriminant failure reports the invariants") {
        // indefinite symmetric matrix whose Delta^2 - 4 det sigma = -0.44;
        // unreachable from physical states but a valid raw input
        Eigen::Matrix4d m;
        m << 0.126, -0.334, -0.032, -1.110,  //
            -0.334, 0.362, 0.019, 0.364,     //
            -0.032, 0.019, -0.623, -0.602,   //
            -1.110, 0.364, -0.602, -0.732;
        CHECK_THROWS_AS(symplectic_eigenvalues(CovarianceMatrix::from_matrix(m)),
                        NumericalDomainError);
        CHECK_THROWS_WITH_AS(symplectic_eigenvalues(CovarianceMatrix::from_matrix(m)),
                             doctest::Contains("det sigma"), NumericalDomainError);
    }
}

TEST_CASE("partial-transpose symplectic eigenvalues (half convention)") {
    SUBCASE("vacuum -> (1/2, 1/2)") {
        const auto nu = pt_symplectic_eigenvalues(CovarianceMatrix::vacuum());
        CHECK(nu.minus == 0.5);
        CHECK(nu.plus == 0.5);
    }
    SUBCASE("two-mode squeezed r = 4: nu_tilde_minus = exp(-4)/2") {
        const auto nu = pt_symplectic_eigenvalues(two_mode_squeezed_state(Squeezing(4.0)));
        CHECK(near(nu.minus, 0.009157819444367090, 1e-12));
        // brute force: symplectic spectrum = |imag eigenvalues| of Omega * PT(sigma)
        Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
        omega(0, 1) = 1.0, omega(1, 0) = -1.0, omega(2, 3) = 1.0, omega(3, 2) = -1.0;
        Eigen::Matrix4d pt = two_mode_squeezed_state(Squeezing(4.0)).matrix();
        pt.row(3) *= -1.0;
        pt.col(3) *= -1.0;
        const Eigen::EigenSolver<Eigen::Matrix4d> solver(omega * pt);
        double lo = 1e300, hi = 0.0;
        for (int i = 0; i < 4; ++i) {
            const double v = std::abs(solver.eigenvalues()(i).imag());
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK(near(nu.minus, lo, 1e-10));
        CHECK(near(nu.plus, hi, 1e-7 * hi));
    }
    SUBCASE("thermal product at T = 1: nu_tilde_minus = coth(1/2)/2") {
        Eigen::Matrix4d m = Eigen::Matrix4d::Identity() * (2.1639534137386528 / 2.0);
        const auto nu = pt_symplectic_eigenvalues(CovarianceMatrix::from_matrix(m));
        CHECK(near(nu.minus, 1.0819767068693264, 1e-12));
    }
    SUBCASE("C = 0 makes PT spectrum the halved ordinary spectrum") {
        test::RandomStates gen;
        for (int i = 0; i < 200; ++i) {
            CovarianceMatrix sigma = gen.next();
            Blocks blocks = block_decompose(sigma);
            blocks.c.setZero();
            sigma = assemble_blocks(blocks);
            const auto nu = symplectic_eigenvalues(sigma);
            const auto pt = pt_symplectic_eigenvalues(sigma);
            CHECK(near(pt.minus, 0.5 * nu.minus, 1e-12));
            CHECK(near(pt.plus, 0.5 * nu.plus, 1e-12));
        }
    }
}

TEST_CASE("physicality gate") {
    CHECK(is_physical(CovarianceMatrix::vacuum(), 1e-10));
    CHECK(is_physical(two_mode_squeezed_state(Squeezing(4.0)), 1e-10));
    CHECK_FALSE(is_physical(CovarianceMatrix::from_matrix(0.25 * Eigen::Matrix4d::Identity()),
                            1e-10));
    CHECK_FALSE(is_physical(CovarianceMatrix::from_matrix(-Eigen::Matrix4d::Identity()), 1e-10));

    SUBCASE("constructors produce physical states for every r") {
        for (double r : {0.0, 0.1, 1.0, 2.5, 4.0, 6.0}) {
            CHECK(is_physical(separable_squeezed_state(Squeezing(r)), 1e-10));
            CHECK(is_physical(two_mode_squeezed_state(Squeezing(r)), 1e-10));
        }
    }
}

TEST_CASE("storage symmetry is enforced") {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m(0, 1) = 0.3;  // asymmetric input
    const CovarianceMatrix sigma = CovarianceMatrix::from_matrix(m);
    CHECK(sigma(0, 1) == sigma(1, 0));
    CHECK(sigma(0, 1) == 0.15);
}
