// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chiral_spectra/mko.hpp"
#include "chiral_spectra/spectral.hpp"
#include "chiral_spectra/verify_suite.hpp"

using namespace chiral;
using linalg::Complex;

namespace {

constexpr double kQuarter = std::numbers::pi / 4.0;

walks::MkoParams quarter(double gamma)
{
    return {gamma, 0.0, kQuarter, kQuarter};
}

/// Direct 2x2 product with the shift symbol diag(e^{i xi}, e^{-i xi}).
Eigen::Matrix2cd momentum_oracle(const walks::MkoParams& mp, double xi)
{
    auto coin = [](double t) {
        Eigen::Matrix2cd c;
        c << std::cos(t), Complex(0, std::sin(t)), Complex(0, std::sin(t)), std::cos(t);
        return c;
    };
    Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
    s(0, 0) = std::polar(1.0, xi);
    s(1, 1) = std::polar(1.0, -xi);
    Eigen::Matrix2cd g = Eigen::Matrix2cd::Zero();
    g(0, 0) = std::exp(mp.gamma);
    g(1, 1) = std::exp(-mp.gamma);
    Eigen::Matrix2cd ph = Eigen::Matrix2cd::Zero();
    ph(0, 0) = std::polar(1.0, mp.phi);
    ph(1, 1) = std::polar(1.0, -mp.phi);
    return s * g * ph * coin(mp.theta2) * s * g.inverse() * ph * coin(mp.theta1);
}

} // namespace

TEST(Mko, MomentumMatrixMatchesDirectProduct)
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 20; ++i) {
        const walks::MkoParams mp{0.7 * ang(rng) / 6.0, ang(rng), ang(rng), ang(rng)};
        const double xi = ang(rng);
        EXPECT_LT((walks::mko_momentum_matrix(mp, xi) - momentum_oracle(mp, xi)).norm(), 1e-13);
    }
}

TEST(Mko, DerivedParametersAtQuarterAngles)
{
    const auto mp = quarter(0.0);
    EXPECT_NEAR(mp.p(), -std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(mp.a(), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(mp.m_gamma(), -1.0, 1e-15);
    EXPECT_NEAR(mp.M_gamma(), 0.0, 1e-15);
    ASSERT_TRUE(mp.gamma_threshold(0).has_value());
    ASSERT_TRUE(mp.gamma_threshold(1).has_value());
    EXPECT_NEAR(*mp.gamma_threshold(0), 0.0, 1e-12);
    EXPECT_NEAR(*mp.gamma_threshold(1), std::log(1.0 + std::sqrt(2.0)), 1e-12);
}

TEST(Mko, RegimesFollowClipping)
{
    EXPECT_EQ(walks::mko_closed_form(quarter(0.0)).regime, walks::MkoRegime::circle_only);
    EXPECT_EQ(walks::mko_closed_form(quarter(0.5)).regime, walks::MkoRegime::mixed);
    EXPECT_EQ(walks::mko_closed_form(quarter(1.2)).regime, walks::MkoRegime::real_only);
    for (double g = 0.0; g <= 2.0; g += 0.05) {
        const auto set = walks::mko_closed_form(quarter(g));
        EXPECT_EQ(set.regime, verify::expected_regime(set.m_gamma, set.M_gamma)) << g;
    }
    EXPECT_THROW(walks::mko_closed_form({0.0, 0.0, 0.0, kQuarter}), InputError);
    EXPECT_THROW(walks::mko_closed_form({-0.1, 0.0, kQuarter, kQuarter}), InputError);
}

TEST(Mko, UnimodularWithoutGain)
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ang(0.1, 3.0);
    for (int i = 0; i < 5; ++i) {
        const walks::MkoParams mp{0.0, ang(rng), ang(rng), ang(rng)};
        for (const auto& s : walks::mko_sample(mp, 512))
            for (const auto& z : s.eigenvalues)
                EXPECT_NEAR(std::abs(z), 1.0, 1e-10);
    }
}

TEST(Mko, SampledEigenvaluesLieInClosedForm)
{
    for (double g : {0.2, 0.5, 0.8, 1.0, 1.5}) {
        const auto mp = quarter(g);
        const auto set = walks::mko_closed_form(mp);
        double worst = 0.0;
        for (const auto& s : walks::mko_sample(mp, 512))
            for (const auto& z : s.eigenvalues)
                worst = std::max(worst, walks::distance_to_set(set, z));
        EXPECT_LE(worst, 1e-6) << g;
    }
}

TEST(Mko, EigenvaluesSatisfyBandRelation)
{
    // (lambda + 1/lambda)/2 lies in [m_gamma, M_gamma].
    const auto mp = quarter(0.5);
    for (const auto& s : walks::mko_sample(mp, 256))
        for (const auto& z : s.eigenvalues) {
            const Complex w = (z + 1.0 / z) / 2.0;
            EXPECT_NEAR(w.imag(), 0.0, 1e-10);
            EXPECT_GE(w.real(), mp.m_gamma() - 1e-10);
            EXPECT_LE(w.real(), mp.M_gamma() + 1e-10);
        }
}

TEST(Mko, EquivalenceFactors)
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 64; ++i) {
        const walks::MkoParams mp{ang(rng) / 5.0, ang(rng), ang(rng), ang(rng)};
        const double xi = ang(rng);
        const auto f = walks::mko_equivalence_factors(mp, xi);
        EXPECT_LT((f.s_mko - f.s_mko.adjoint()).norm(), 1e-12);
        EXPECT_LT((f.s_mko * f.s_mko - Eigen::Matrix2cd::Identity()).norm(), 1e-12);
        EXPECT_LT((f.c_mko - f.c_mko.adjoint()).norm(), 1e-12);
        EXPECT_NEAR(std::abs(f.c_mko.determinant() + 1.0), 0.0, 1e-12);
        EXPECT_LE(verify::multiset_distance2(walks::eigenvalues2(walks::mko_momentum_matrix(mp, xi)),
                                             walks::eigenvalues2(f.s_mko * f.c_mko)),
                  1e-10);
    }
}

TEST(Mko, HausdorffDistanceShrinksWithGrid)
{
    for (double g : {0.0, 0.5, 1.2}) {
        const auto mp = quarter(g);
        const auto set = walks::mko_closed_form(mp);
        double prev = 1e9;
        for (int e = 8; e <= 12; ++e) {
            const double h = walks::mko_hausdorff(set, walks::mko_sample(mp, 1 << e)).value();
            EXPECT_LT(h, prev) << "gamma " << g << " grid 2^" << e;
            prev = h;
        }
        EXPECT_LT(prev, 0.05) << g;
    }
}

TEST(Mko, RingTruncationAgreesWithPairAndSet)
{
    for (double g : {0.0, 0.5, 1.2}) {
        const auto mp = quarter(g);
        const auto set = walks::mko_closed_form(mp);
        const auto pair = walks::mko_ring_pair(mp, 8);
        EXPECT_NEAR(pair.a() * pair.b(), -1.0, 1e-12);
        for (const auto& z : linalg::eig_general(walks::mko_ring_evolution(mp, 8)).eigenvalues)
            EXPECT_LE(walks::distance_to_set(set, z), 1e-6) << g;
        for (const auto& z : linalg::eig_general(pair.U()).eigenvalues)
            EXPECT_LE(walks::distance_to_set(set, z), 1e-6) << g;
        EXPECT_TRUE(spectral::verify_mapping(pair).match) << g;
    }
}
