// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "chiral_spectra/spectral.hpp"
#include "chiral_spectra/walks.hpp"
#include "chiral_spectra/zeta.hpp"

using namespace chiral;
using linalg::Complex;

TEST(Grover, EvolutionIsUnitaryAndPositiveSupportIsNonBacktracking)
{
    for (const std::string name : {"k4", "k5", "k33", "petersen"}) {
        const auto g = graph::builtin(name);
        const auto u = walks::grover_evolution(g);
        EXPECT_LT(linalg::max_abs(u * u.adjoint() - linalg::identity(u.rows())), 1e-13) << name;
        EXPECT_EQ(walks::positive_support(u), zeta::nonbacktracking_matrix(g)) << name;
        const auto p = walks::grover_positive_support(g);
        EXPECT_LT(linalg::max_abs(p.U() - linalg::to_complex(zeta::nonbacktracking_matrix(g))), 1e-12) << name;
        EXPECT_LT(linalg::max_abs(p.T() - walks::isotropic_transition(g)), 1e-14) << name;
    }
}

TEST(Grover, DegreeTwoIsRejected)
{
    EXPECT_THROW(walks::grover_positive_support(graph::builtin("c4")), InputError);
    EXPECT_THROW(walks::grover_positive_support(graph::Graph(3, {{0, 1}, {1, 2}})), InputError);
}

TEST(Correlated, TransitionMatchesPairAndIsStochastic)
{
    for (const std::string name : {"c4", "k4", "petersen"}) {
        const auto g = graph::builtin(name);
        for (double p : {0.0, 0.2, 0.5, 0.9, 1.0}) {
            const auto pair = walks::correlated_walk(g, p);
            const auto direct = walks::correlated_transition(g, p);
            EXPECT_LT(linalg::max_abs(pair.U() - direct), 1e-14) << name << " p=" << p;
            for (Eigen::Index r = 0; r < direct.rows(); ++r)
                EXPECT_NEAR(direct.row(r).sum().real(), 1.0, 1e-14);
            EXPECT_LT(linalg::max_abs(pair.T() - walks::isotropic_transition(g)), 1e-14);
            EXPECT_DOUBLE_EQ(pair.a(), 1.0);
        }
    }
    EXPECT_THROW(walks::correlated_walk(graph::builtin("k4"), 1.5), InputError);
}

TEST(Correlated, ParametersAndCriticalPoint)
{
    const walks::CorrelatedParams c4{0.75, 2};
    EXPECT_NEAR(c4.b(), 0.5, 1e-15);
    EXPECT_NEAR(c4.r(), 0.5, 1e-15);
    const walks::CorrelatedParams k4{0.0, 3};
    EXPECT_NEAR(k4.b(), -0.5, 1e-15);
    EXPECT_NEAR(k4.r(), 0.5, 1e-15);
    EXPECT_FALSE(walks::correlated_walk(graph::builtin("k4"), 1.0 / 3.0).flags().ab_nonzero);
}

TEST(Correlated, FullBacktrackingHasSpectrumPlusMinusOne)
{
    const auto ev = linalg::eig_general(walks::correlated_transition(graph::builtin("k4"), 1.0)).eigenvalues;
    for (const auto& z : ev)
        EXPECT_NEAR(std::abs(std::abs(z.real()) - 1.0) + std::abs(z.imag()), 0.0, 1e-12);
}

TEST(HomogeneousExample, StructureAndNormality)
{
    const Eigen::Vector2cd e1(1.0, 0.0);
    const auto normal = walks::example_homogeneous(e1, 1.0, 0.0, 5, 2.0, -0.5);
    EXPECT_LT(linalg::max_abs(normal.S() * normal.projection() - normal.projection() * normal.S()), 1e-14);
    const ComplexMatrix& u = normal.U();
    EXPECT_LT(linalg::operator_norm(u * u.adjoint() - u.adjoint() * u), 1e-12);

    const Eigen::Vector2cd diag(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    const auto skew = walks::example_homogeneous(diag, 0.0, 1.0, 6, 2.0, -0.5);
    EXPECT_GT(linalg::max_abs(skew.S() * skew.projection() - skew.projection() * skew.S()), 1e-3);
    const ComplexMatrix& v = skew.U();
    EXPECT_GT(linalg::operator_norm(v * v.adjoint() - v.adjoint() * v), 1e-3);

    const auto generic = walks::example_homogeneous(diag, 0.6, Complex(0.0, 0.8), 7, 1.0, 3.0);
    EXPECT_LT(linalg::max_abs(generic.S() * generic.S() - linalg::identity(14)), 1e-12);

    EXPECT_THROW(walks::example_homogeneous(e1, 0.5, 0.5, 5, 1.0, 2.0), InputError);
    EXPECT_THROW(walks::example_homogeneous(e1 * 2.0, 1.0, 0.0, 5, 1.0, 2.0), InputError);
    EXPECT_THROW(walks::example_homogeneous(e1, 1.0, 0.0, 2, 1.0, 2.0), InputError);
}

TEST(HomogeneousExample, MappingHolds)
{
    const Eigen::Vector2cd phi(std::cos(0.3), std::sin(0.3));
    const auto p = walks::example_homogeneous(phi, 0.6, 0.8, 6, 2.0, -0.5);
    EXPECT_TRUE(p.flags().all());
    EXPECT_TRUE(spectral::verify_mapping(p).passed());
}

TEST(InhomogeneousExample, CoinAndCommutator)
{
    const auto p = walks::example_inhomogeneous(0.6, 0.8, 6);
    EXPECT_LT(linalg::max_abs(p.C() - walks::inhomogeneous_coin(0.6, 0.8, 6)), 1e-12);
    EXPECT_NEAR(p.a(), 1.0, 1e-15);
    EXPECT_NEAR(p.b(), -1.0, 1e-15);
    EXPECT_GT(linalg::max_abs(p.S() * p.projection() - p.projection() * p.S()), 1e-3);

    const auto trivial = walks::example_inhomogeneous(1.0, 0.0, 4);
    EXPECT_LT(linalg::max_abs(trivial.C() - walks::inhomogeneous_coin(1.0, 0.0, 4)), 1e-12);

    EXPECT_THROW(walks::example_inhomogeneous(0.0, 0.0, 4), InputError);
    EXPECT_THROW(walks::example_inhomogeneous(1.0, 0.0, 5), InputError);
    EXPECT_THROW(walks::example_inhomogeneous(1.0, 0.0, 2), InputError);
}

TEST(InhomogeneousExample, CoinEigenvectorIsUnitEigenvector)
{
    for (auto [alpha, beta] : {std::pair<double, Complex>{0.3, {0.4, 0.2}}, {-0.7, {0.1, -0.5}}, {0.0, {0.0, 1.0}}}) {
        const auto v = walks::inhomogeneous_coin_eigenvector(alpha, beta);
        Eigen::Matrix2cd c;
        c << alpha, beta, std::conj(beta), -alpha;
        const double s = walks::inhomogeneous_coin_radius(alpha, beta);
        EXPECT_NEAR(v.norm(), 1.0, 1e-15);
        EXPECT_LT((c * v - s * v).norm(), 1e-14);
    }
}

TEST(InhomogeneousExample, MappingMatchesOnAllInstances)
{
    struct Inst {
        double alpha;
        Complex beta;
        int n;
    };
    for (const auto& i : {Inst{1.0, 0.0, 4}, Inst{0.6, 0.8, 6}, Inst{0.3, {0.4, 0.2}, 8}}) {
        const auto rep = spectral::verify_mapping(walks::example_inhomogeneous(i.alpha, i.beta, i.n));
        EXPECT_TRUE(rep.match) << i.alpha << " " << i.beta << " " << i.n;
        EXPECT_TRUE(rep.bounds.passed());
    }
}
