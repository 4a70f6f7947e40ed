// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "chiral_spectra/report.hpp"
#include "chiral_spectra/spectral.hpp"
#include "chiral_spectra/walks.hpp"
#include "chiral_spectra/zeta.hpp"
#include "oracles.hpp"

using namespace chiral;
using linalg::Complex;

namespace {

const spectral::SpectralAtom* find_atom(const std::vector<spectral::SpectralAtom>& atoms, Complex z,
                                        double tol = 1e-10)
{
    for (const auto& a : atoms)
        if (std::abs(a.value - z) <= tol)
            return &a;
    return nullptr;
}

/// Grover pair U for a graph built from its definition with integer entries.
Eigen::MatrixXi grover_support_oracle(const graph::Graph& g)
{
    const auto arcs = graph::arc_structure(g);
    const auto n = static_cast<Eigen::Index>(arcs.size());
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
    for (Eigen::Index e = 0; e < n; ++e)
        for (Eigen::Index f = 0; f < n; ++f)
            if (arcs.arcs[f].terminus == arcs.arcs[e].origin && arcs.arcs[f].origin != arcs.arcs[e].terminus)
                m(e, f) = 1;
    return m;
}

} // namespace

TEST(Joukowsky, RoundTripAndVieta)
{
    const spectral::JoukowskyParams jp(3.0, -1.0);
    for (double t : {-1.0, -0.4, 0.0, 0.25, 0.9, 1.0}) {
        const auto r = spectral::joukowsky_inverse(jp, t);
        EXPECT_NEAR(std::abs(spectral::joukowsky(jp, r.plus) - t), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(spectral::joukowsky(jp, r.minus) - t), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(r.plus * r.minus - 3.0), 0.0, 1e-12);  // -ab
        EXPECT_NEAR(std::abs(r.plus + r.minus - 4.0 * t), 0.0, 1e-12);
    }
    EXPECT_THROW(spectral::JoukowskyParams(1.0, 1.0), InputError);
    EXPECT_THROW(spectral::JoukowskyParams(1.0, 0.0), InputError);
    ASSERT_TRUE(jp.circle_radius().has_value());
    EXPECT_NEAR(*jp.circle_radius(), std::sqrt(3.0), 1e-15);
}

TEST(Joukowsky, DegenerateRootIsFlagged)
{
    // (a-b)^2 t^2 + 4ab = 0 at t = sqrt(-4ab)/(a-b) = sqrt(12)/4.
    const spectral::JoukowskyParams jp(3.0, -1.0);
    const auto r = spectral::joukowsky_inverse(jp, std::sqrt(12.0) / 4.0);
    EXPECT_TRUE(r.degenerate);
    EXPECT_NEAR(std::abs(r.plus - r.minus), 0.0, 1e-7);
}

TEST(Spectral, K4GroverPredictedSpectrum)
{
    const auto p = walks::grover_positive_support(graph::builtin("k4"));
    const auto atoms = spectral::predicted_spectrum(p);
    EXPECT_EQ(spectral::geometric_total(atoms), 12);
    const double s7 = std::sqrt(7.0) / 2.0;
    struct Expect {
        Complex z;
        int mult;
    };
    for (const auto& e : {Expect{{2, 0}, 1}, Expect{{1, 0}, 3}, Expect{{-1, 0}, 2}, Expect{{-0.5, s7}, 3},
                          Expect{{-0.5, -s7}, 3}}) {
        const auto* a = find_atom(atoms, e.z);
        ASSERT_NE(a, nullptr) << e.z;
        EXPECT_EQ(a->multiplicity, e.mult) << e.z;
    }
}

TEST(Spectral, IntegerBirthMultiplicitiesMatchExactRank)
{
    for (const std::string name : {"k4", "k5", "k33", "petersen"}) {
        const auto g = graph::builtin(name);
        const int k = *graph::graph_invariants(g).degree;
        const auto oracle_u = grover_support_oracle(g);
        const auto atoms = spectral::predicted_spectrum(walks::grover_positive_support(g));
        for (int lambda : {k - 1, 1, -1}) {
            const auto* a = find_atom(atoms, Complex(lambda, 0.0), 1e-9);
            const int exact = oracle::exact_kernel_dimension(oracle_u, lambda);
            EXPECT_EQ(a ? a->multiplicity : 0, exact) << name << " lambda=" << lambda;
        }
    }
}

TEST(Spectral, InheritedAtomsFollowAdjacencySpectrum)
{
    // mu/2 +- sqrt(mu^2 - 4(k-1))/2 over adjacency eigenvalues mu != +-k.
    const auto g = graph::builtin("petersen");
    const auto mu = oracle::jacobi_hermitian_eigenvalues(linalg::to_complex(graph::adjacency(g)));
    const auto atoms = spectral::predicted_spectrum(walks::grover_positive_support(g));
    for (double m : mu) {
        if (std::abs(std::abs(m) - 3.0) < 1e-9)
            continue;
        const Complex root = std::sqrt(Complex(m * m - 8.0, 0.0));
        EXPECT_NE(find_atom(atoms, (m + root) / 2.0, 1e-9), nullptr) << m;
        EXPECT_NE(find_atom(atoms, (m - root) / 2.0, 1e-9), nullptr) << m;
    }
}

TEST(Spectral, VerifyMappingOnGroverCatalog)
{
    for (const std::string name : {"k4", "k5", "k33", "petersen"}) {
        const auto rep = spectral::verify_mapping(walks::grover_positive_support(graph::builtin(name)));
        EXPECT_TRUE(rep.match) << name << (rep.notes.empty() ? "" : rep.notes.front());
        EXPECT_TRUE(rep.bounds.passed()) << name;
        EXPECT_EQ(spectral::geometric_total(rep.predicted), rep.n) << name;
    }
}

TEST(Spectral, PerturbedOperatorIsRejected)
{
    const auto p = walks::grover_positive_support(graph::builtin("k4"));
    ComplexMatrix u = p.U();
    u(0, 1) += 1e-3;
    u(5, 2) -= 2e-3;
    const auto rep = spectral::verify_against(p, u);
    EXPECT_FALSE(rep.match);
}

TEST(Spectral, TinyToleranceIsRejected)
{
    const auto p = walks::grover_positive_support(graph::builtin("k4"));
    spectral::SpectralOptions opt;
    opt.tol = 1e-20;
    bool failed = false;
    try {
        failed = !spectral::verify_mapping(p, opt).match;
    } catch (const NumericalError&) {
        failed = true;
    }
    EXPECT_TRUE(failed);
}

TEST(Spectral, PredictionRequiresAssumptions)
{
    // K4 correlated walk at p = 1/k has b = 0.
    const auto p = walks::correlated_walk(graph::builtin("k4"), 1.0 / 3.0);
    EXPECT_FALSE(p.flags().ab_nonzero);
    EXPECT_THROW(spectral::predicted_spectrum(p), InputError);
    const auto one = walks::correlated_walk(graph::builtin("k4"), 1.0);
    EXPECT_THROW(spectral::predicted_spectrum(one), InputError);
}

TEST(Spectral, CorrelatedC4AtThreeQuarters)
{
    // k = 2, p = 3/4: a = 1, b = 1/2.
    const auto p = walks::correlated_walk(graph::builtin("c4"), 0.75);
    EXPECT_NEAR(p.b(), 0.5, 1e-15);
    const auto atoms = spectral::predicted_spectrum(p);
    const double h = std::sqrt(0.5);
    for (Complex z : {Complex(1, 0), Complex(-1, 0), Complex(-0.5, 0), Complex(0.5, 0), Complex(h, 0), Complex(-h, 0)})
        EXPECT_NE(find_atom(atoms, z, 1e-9), nullptr) << z;
    EXPECT_EQ(spectral::geometric_total(atoms), 8);
    EXPECT_TRUE(spectral::verify_mapping(p).passed());
}

TEST(Spectral, DirectClustersCountGeometricMultiplicity)
{
    // A Jordan block has algebraic multiplicity 2 but geometric 1.
    ComplexMatrix j = ComplexMatrix::Zero(3, 3);
    j(0, 0) = 2.0;
    j(0, 1) = 1.0;
    j(1, 1) = 2.0;
    j(2, 2) = -1.0;
    spectral::SpectralOptions opt;
    const auto ds = spectral::direct_spectrum_of(j, opt, {{Complex(2.0, 0.0), 1e-4}});
    ASSERT_EQ(ds.clusters.size(), 2u);
    EXPECT_EQ(ds.clusters[1].algebraic, 2);
    EXPECT_EQ(ds.clusters[1].geometric, 1);
    EXPECT_EQ(ds.clusters[0].geometric, 1);
}

TEST(Spectral, NearbyEigenvaluesRaiseAmbiguity)
{
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 1.0 + 5e-8;
    EXPECT_THROW(spectral::direct_spectrum_of(d), spectral::ClusteringAmbiguity);
}

TEST(Spectral, HungarianFindsOptimalAssignment)
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 5;
        std::vector<std::vector<double>> cost(n, std::vector<double>(n));
        for (auto& row : cost)
            for (auto& c : row)
                c = u(rng);
        const auto assign = spectral::detail::hungarian(cost);
        double got = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            got += cost[i][assign[i]];
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        double best = 1e300;
        do {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                s += cost[i][perm[i]];
            best = std::min(best, s);
        } while (std::next_permutation(perm.begin(), perm.end()));
        EXPECT_NEAR(got, best, 1e-12);
    }
}

TEST(Spectral, BoundsHoldOnCatalogPairs)
{
    std::vector<ChiralPair> pairs;
    for (const std::string name : {"k4", "k5", "k33", "petersen"})
        pairs.push_back(walks::grover_positive_support(graph::builtin(name)));
    pairs.push_back(walks::correlated_walk(graph::builtin("c4"), 0.2));
    pairs.push_back(walks::correlated_walk(graph::builtin("k4"), 0.8));
    pairs.push_back(walks::example_inhomogeneous(0.6, 0.8, 6));
    for (const auto& p : pairs) {
        const auto z = spectral::default_resolvent_samples(p.a(), p.b());
        EXPECT_EQ(z.size(), 20u);
        const auto b = spectral::check_bounds(p, z);
        EXPECT_TRUE(b.passed());
        EXPECT_GT(b.resolvent.checked, 0);
        EXPECT_EQ(b.annulus.checked, p.dim_H());
    }
}

TEST(Report, JsonAndCsvLayout)
{
    const auto rep = spectral::verify_mapping(walks::grover_positive_support(graph::builtin("k4")), {}, "grover");
    const auto j = report::to_json(rep);
    for (const char* key : {"model", "n", "a", "b", "atoms", "direct", "verdict", "bounds"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["verdict"], "match");
    EXPECT_EQ(j["atoms"].size(), rep.predicted.size());
    for (const char* key : {"re", "im", "mult", "origin", "t_source", "degenerate"})
        EXPECT_TRUE(j["atoms"][0].contains(key)) << key;
    for (const char* key : {"annulus", "locus", "resolvent"})
        EXPECT_TRUE(j["bounds"].contains(key)) << key;

    const auto csv = report::to_csv(rep);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "re,im,mult_geometric,origin,t_source");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + static_cast<long>(rep.direct.clusters.size()));
    EXPECT_EQ(report::fmt17(0.1), "0.10000000000000001");
}
