// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

// Concrete chiral pairs: walks on regular graphs built from the arc space,
// and two families of walks on a ring of N sites with a C^2 internal space.
//
// Graph walks share S = J (arc reversal) and d = K_in / sqrt(k); only the
// coin eigenvalues differ. Ring walks use the block ordering
// index = component * N + site, and L is the cyclic shift (L f)(x) = f(x+1).

#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "chiral_spectra/chiral.hpp"
#include "chiral_spectra/error.hpp"
#include "chiral_spectra/graph.hpp"
#include "chiral_spectra/linalg.hpp"

namespace chiral::walks {

using linalg::Complex;
using linalg::ComplexMatrix;

/// S = J and d = K_in / sqrt(k) for a k-regular graph.
struct ArcOperators {
    ComplexMatrix shift;
    ComplexMatrix coisometry;
    int degree = 0;
};

inline ArcOperators arc_operators(const graph::Graph& g, int degree)
{
    const auto arcs = graph::arc_structure(g);
    const auto inc = graph::incidence_matrices(g);
    return {linalg::to_complex(graph::reversal_matrix(arcs)),
            linalg::to_complex(inc.in) / std::sqrt(static_cast<double>(degree)), degree};
}

/// The Grover walk on arcs: (U psi)(e) = -psi(reverse e) + (2/k) sum_{t(e')=o(e)} psi(e').
inline ComplexMatrix grover_evolution(const graph::Graph& g)
{
    const int k = graph::require_connected_regular(g, 1, "grover_evolution");
    const auto arcs = graph::arc_structure(g);
    const auto na = static_cast<Eigen::Index>(arcs.size());
    ComplexMatrix u = ComplexMatrix::Zero(na, na);
    for (Eigen::Index e = 0; e < na; ++e) {
        const auto& arc = arcs.arcs[static_cast<std::size_t>(e)];
        for (Eigen::Index f = 0; f < na; ++f)
            if (arcs.arcs[static_cast<std::size_t>(f)].terminus == arc.origin)
                u(e, f) += 2.0 / k;
        u(e, static_cast<Eigen::Index>(arcs.reversal[static_cast<std::size_t>(e)])) -= 1.0;
    }
    return u;
}

/// Entrywise indicator of strictly positive real entries.
inline linalg::IntMatrix positive_support(const ComplexMatrix& m)
{
    return m.real().unaryExpr([](double x) { return x > 0.0 ? 1 : 0; });
}

/// Positive support of the Grover walk as the pair S = J, d = K_in/sqrt(k),
/// a = k - 1, b = -1, so that U = S(k d^*d - I) = B' - J.
inline ChiralPair grover_positive_support(const graph::Graph& g)
{
    const int k = graph::require_connected_regular(g, 1, "grover_positive_support");
    if (k < 3)
        throw InputError("grover_positive_support: degree " + std::to_string(k) +
                         " < 3 gives a = k-1 = -b (excluded)");
    auto ops = arc_operators(g, k);
    return build_chiral_pair(std::move(ops.shift), std::move(ops.coisometry), k - 1.0, -1.0);
}

struct CorrelatedParams {
    double p = 0.0;
    int k = 2;

    double a() const noexcept { return 1.0; }
    double b() const noexcept { return (p * k - 1.0) / (k - 1.0); }
    /// Gap edge of the real spectrum; sqrt(r) is the circle radius for p < 1/k.
    double r() const noexcept { return std::abs(p * k - 1.0) / (k - 1.0); }
};

/// Correlated random walk with backtracking probability p:
/// (P psi)(e) = p psi(reverse e) + ((1-p)/(k-1)) sum_{t(e')=o(e), e' != reverse e} psi(e').
inline ChiralPair correlated_walk(const graph::Graph& g, double p)
{
    const int k = graph::require_connected_regular(g, 2, "correlated_walk");
    if (!(p >= 0.0 && p <= 1.0))
        throw InputError("correlated_walk: p must lie in [0, 1]");
    const CorrelatedParams cp{p, k};
    auto ops = arc_operators(g, k);
    return build_chiral_pair(std::move(ops.shift), std::move(ops.coisometry), cp.a(), cp.b());
}

/// The correlated-walk transition matrix assembled straight from its
/// definition, independent of the chiral-pair route.
inline ComplexMatrix correlated_transition(const graph::Graph& g, double p)
{
    const int k = graph::require_connected_regular(g, 2, "correlated_transition");
    const auto arcs = graph::arc_structure(g);
    const auto na = static_cast<Eigen::Index>(arcs.size());
    ComplexMatrix m = ComplexMatrix::Zero(na, na);
    for (Eigen::Index e = 0; e < na; ++e) {
        const auto& arc = arcs.arcs[static_cast<std::size_t>(e)];
        const auto back = static_cast<Eigen::Index>(arcs.reversal[static_cast<std::size_t>(e)]);
        m(e, back) = p;
        for (Eigen::Index f = 0; f < na; ++f)
            if (f != back && arcs.arcs[static_cast<std::size_t>(f)].terminus == arc.origin)
                m(e, f) = (1.0 - p) / (k - 1.0);
    }
    return m;
}

/// Isotropic random-walk transition matrix on vertices, (P0 f)(u) = (1/k) sum f(o(e)).
inline ComplexMatrix isotropic_transition(const graph::Graph& g)
{
    const int k = graph::require_connected_regular(g, 1, "isotropic_transition");
    return linalg::to_complex(graph::adjacency(g)) / static_cast<double>(k);
}

// Ring walks.

/// Cyclic shift on C^N, (L f)(x) = f(x + 1 mod N).
inline ComplexMatrix ring_shift(int n)
{
    ComplexMatrix l = ComplexMatrix::Zero(n, n);
    for (int x = 0; x < n; ++x)
        l(x, (x + 1) % n) = 1.0;
    return l;
}

/// Homogeneous ring walk: S = [[p, qL], [conj(q) L^*, -p]] and
/// (d psi)(x) = <phi, psi(x)>. Requires p^2 + |q|^2 = 1 and ||phi|| = 1.
inline ChiralPair example_homogeneous(const Eigen::Vector2cd& phi, double p, Complex q, int n,
                                      double a, double b)
{
    if (n < 3)
        throw InputError("example_homogeneous: ring size must be at least 3");
    if (std::abs(p * p + std::norm(q) - 1.0) > 1e-12)
        throw InputError("example_homogeneous: p^2 + |q|^2 must equal 1");
    if (std::abs(phi.norm() - 1.0) > 1e-12)
        throw InputError("example_homogeneous: phi must be a unit vector");

    const ComplexMatrix l = ring_shift(n);
    ComplexMatrix s(2 * n, 2 * n);
    s.topLeftCorner(n, n) = p * linalg::identity(n);
    s.topRightCorner(n, n) = q * l;
    s.bottomLeftCorner(n, n) = std::conj(q) * l.adjoint();
    s.bottomRightCorner(n, n) = -p * linalg::identity(n);

    ComplexMatrix d = ComplexMatrix::Zero(n, 2 * n);
    for (int x = 0; x < n; ++x) {
        d(x, x) = std::conj(phi(0));
        d(x, n + x) = std::conj(phi(1));
    }
    return build_chiral_pair(std::move(s), std::move(d), a, b);
}

/// Coin eigenvalues +-sqrt(alpha^2 + |beta|^2) of the inhomogeneous example.
inline double inhomogeneous_coin_radius(double alpha, Complex beta)
{
    return std::sqrt(alpha * alpha + std::norm(beta));
}

/// Normalised eigenvector of [[alpha, beta], [conj(beta), -alpha]] for the
/// eigenvalue +sqrt(alpha^2 + |beta|^2).
inline Eigen::Vector2cd inhomogeneous_coin_eigenvector(double alpha, Complex beta)
{
    const double s = inhomogeneous_coin_radius(alpha, beta);
    Eigen::Vector2cd v;
    if (alpha >= 0.0)
        v << Complex(s + alpha, 0.0), std::conj(beta);
    else
        v << beta, Complex(s - alpha, 0.0);
    return v / v.norm();
}

/// Inhomogeneous ring walk: S = [[0, L], [L^*, 0]] and a coin alternating
/// between C1 = [[alpha, beta], [conj(beta), -alpha]] on odd sites and
/// C2 = diag(lambda+, lambda-) on even sites, lambda+- = +-sqrt(alpha^2 + |beta|^2).
/// Hence a = lambda+ = -b.
inline ChiralPair example_inhomogeneous(double alpha, Complex beta, int n)
{
    if (n < 4 || n % 2 != 0)
        throw InputError("example_inhomogeneous: ring size must be even and at least 4");
    const double s_coin = inhomogeneous_coin_radius(alpha, beta);
    if (s_coin == 0.0)
        throw InputError("example_inhomogeneous: (alpha, beta) must not both vanish");

    const ComplexMatrix l = ring_shift(n);
    ComplexMatrix s = ComplexMatrix::Zero(2 * n, 2 * n);
    s.topRightCorner(n, n) = l;
    s.bottomLeftCorner(n, n) = l.adjoint();

    const Eigen::Vector2cd chi_odd = inhomogeneous_coin_eigenvector(alpha, beta);
    const Eigen::Vector2cd chi_even(1.0, 0.0);
    ComplexMatrix d = ComplexMatrix::Zero(n, 2 * n);
    for (int x = 0; x < n; ++x) {
        const auto& chi = (x % 2 == 1) ? chi_odd : chi_even;
        d(x, x) = std::conj(chi(0));
        d(x, n + x) = std::conj(chi(1));
    }
    return build_chiral_pair(std::move(s), std::move(d), s_coin, -s_coin);
}

/// The site-wise coin of the inhomogeneous example assembled directly.
inline ComplexMatrix inhomogeneous_coin(double alpha, Complex beta, int n)
{
    const double s_coin = inhomogeneous_coin_radius(alpha, beta);
    ComplexMatrix c = ComplexMatrix::Zero(2 * n, 2 * n);
    for (int x = 0; x < n; ++x) {
        if (x % 2 == 1) {
            c(x, x) = alpha;
            c(x, n + x) = beta;
            c(n + x, x) = std::conj(beta);
            c(n + x, n + x) = -alpha;
        } else {
            c(x, x) = s_coin;
            c(n + x, n + x) = -s_coin;
        }
    }
    return c;
}

} // namespace chiral::walks
