// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

// Ihara zeta function of a finite graph.
//
//   1/zeta(u) = det(I - u U+),  U+ = B' - J the non-backtracking arc matrix,
//
// and for connected k-regular graphs the three-term form
//
//   1/zeta(u) = (1 - u^2)^{|E|-|V|} prod_{mu in sigma(M)} (1 - mu u + (k-1) u^2).
//
// Both are checked against closed non-backtracking walk counts
// N_m = tr (U+)^m (by matrix powers and by enumeration) and against the
// Euler product over prime reduced cycle classes, truncated in u.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "chiral_spectra/error.hpp"
#include "chiral_spectra/graph.hpp"
#include "chiral_spectra/linalg.hpp"

namespace chiral::zeta {

using linalg::Complex;

inline constexpr std::size_t kZetaArcCap = 64;
inline constexpr std::size_t kWalkArcCap = 30;
inline constexpr int kWalkLengthCap = 12;
inline constexpr std::size_t kEulerArcCap = 16;
inline constexpr int kEulerLengthCap = 8;

/// Real polynomial in u, ascending powers.
struct ZetaPolynomial {
    std::vector<double> coefficients;

    std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// (U+)_{e,e'} = 1 iff e' feeds e without backtracking: t(e') = o(e), e' != reverse(e).
inline linalg::IntMatrix nonbacktracking_matrix(const graph::Graph& g)
{
    const auto arcs = graph::arc_structure(g);
    const auto na = static_cast<Eigen::Index>(arcs.size());
    linalg::IntMatrix m = linalg::IntMatrix::Zero(na, na);
    for (Eigen::Index e = 0; e < na; ++e) {
        const auto& arc = arcs.arcs[static_cast<std::size_t>(e)];
        for (Eigen::Index f = 0; f < na; ++f) {
            if (static_cast<std::size_t>(f) == arcs.reversal[static_cast<std::size_t>(e)])
                continue;
            if (arcs.arcs[static_cast<std::size_t>(f)].terminus == arc.origin)
                m(e, f) = 1;
        }
    }
    return m;
}

/// Rounds each coefficient to the nearest integer when it is within 1e-6.
inline std::vector<double> snap_integers(std::vector<double> c, double tol = 1e-6)
{
    for (auto& x : c) {
        const double r = std::round(x);
        if (std::abs(x - r) <= tol)
            x = r;
    }
    return c;
}

/// det(I - u U+) by exact integer Faddeev-LeVerrier.
inline ZetaPolynomial zeta_reciprocal(const graph::Graph& g)
{
    if (2 * static_cast<std::size_t>(g.edge_count()) > kZetaArcCap)
        throw InputError("zeta_reciprocal: " + std::to_string(2 * g.edge_count()) +
                         " arcs exceed the cap of " + std::to_string(kZetaArcCap));
    const auto exact = linalg::char_poly_exact(nonbacktracking_matrix(g));
    ZetaPolynomial z;
    z.coefficients.assign(exact.begin(), exact.end());
    return z;
}

inline std::vector<double> poly_multiply(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.empty() || y.empty())
        return {};
    std::vector<double> out(x.size() + y.size() - 1, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            out[i + j] += x[i] * y[j];
    return out;
}

/// Three-term form from the adjacency spectrum of a connected k-regular graph.
inline ZetaPolynomial bass_form(const graph::Graph& g)
{
    const int k = graph::require_connected_regular(g, 2, "bass_form");
    const auto mu = linalg::eig_hermitian(linalg::to_complex(graph::adjacency(g))).real_parts();
    std::vector<double> poly{1.0};
    for (int i = 0; i < g.edge_count() - g.vertex_count(); ++i)
        poly = poly_multiply(poly, {1.0, 0.0, -1.0});
    for (double m : mu)
        poly = poly_multiply(poly, {1.0, -m, k - 1.0});
    return {snap_integers(std::move(poly))};
}

/// Largest coefficient difference (missing coefficients count as zero).
inline double coefficient_residue(const ZetaPolynomial& x, const ZetaPolynomial& y)
{
    const std::size_t n = std::max(x.coefficients.size(), y.coefficients.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = i < x.coefficients.size() ? x.coefficients[i] : 0.0;
        const double yi = i < y.coefficients.size() ? y.coefficients[i] : 0.0;
        worst = std::max(worst, std::abs(xi - yi));
    }
    return worst;
}

struct NBWalkCounts {
    std::vector<std::int64_t> counts;  ///< counts[m-1] = N_m
};

/// N_m = tr (U+)^m for m = 1..max_length, rounded after a residue check.
inline std::vector<std::int64_t> nb_walk_counts_by_trace(const graph::Graph& g, int max_length)
{
    const linalg::ComplexMatrix b = linalg::to_complex(nonbacktracking_matrix(g));
    linalg::ComplexMatrix power = linalg::identity(b.rows());
    std::vector<std::int64_t> out;
    for (int m = 1; m <= max_length; ++m) {
        power = b * power;
        const double tr = power.trace().real();
        const double rounded = std::round(tr);
        if (std::abs(tr - rounded) > 1e-6)
            throw NumericalError("nb_walk_counts: trace residue " + std::to_string(tr - rounded) +
                                 " at m = " + std::to_string(m));
        out.push_back(static_cast<std::int64_t>(rounded));
    }
    return out;
}

namespace detail {

struct WalkContext {
    graph::ArcSet arcs;
    std::vector<std::vector<std::size_t>> successors;  ///< arcs that may follow arc e
};

inline WalkContext walk_context(const graph::Graph& g)
{
    WalkContext ctx{graph::arc_structure(g), {}};
    const std::size_t na = ctx.arcs.size();
    ctx.successors.resize(na);
    for (std::size_t e = 0; e < na; ++e)
        for (std::size_t f = 0; f < na; ++f)
            if (ctx.arcs.arcs[f].origin == ctx.arcs.arcs[e].terminus && f != ctx.arcs.reversal[e])
                ctx.successors[e].push_back(f);
    return ctx;
}

/// Visits every closed reduced walk (e_1..e_m), m <= max_length, in which each
/// step including e_m -> e_1 is non-backtracking; each rotation is visited
/// separately.
template <class Visit>
void for_each_closed_walk(const WalkContext& ctx, int max_length, Visit&& visit)
{
    std::vector<std::size_t> path;
    auto closes = [&](std::size_t last, std::size_t first) {
        const auto& s = ctx.successors[last];
        return std::find(s.begin(), s.end(), first) != s.end();
    };
    auto dfs = [&](auto&& self) -> void {
        const std::size_t last = path.back();
        if (closes(last, path.front()))
            visit(path);
        if (static_cast<int>(path.size()) == max_length)
            return;
        for (std::size_t next : ctx.successors[last]) {
            path.push_back(next);
            self(self);
            path.pop_back();
        }
    };
    for (std::size_t start = 0; start < ctx.arcs.size(); ++start) {
        path.assign(1, start);
        dfs(dfs);
    }
}

} // namespace detail

/// N_m by depth-first enumeration of closed reduced walks.
inline std::vector<std::int64_t> nb_walk_counts_by_enumeration(const graph::Graph& g, int max_length)
{
    const auto ctx = detail::walk_context(g);
    std::vector<std::int64_t> out(static_cast<std::size_t>(max_length), 0);
    detail::for_each_closed_walk(ctx, max_length,
                                 [&](const std::vector<std::size_t>& w) { ++out[w.size() - 1]; });
    return out;
}

/// N_1..N_L computed both ways; disagreement throws VerificationError.
inline NBWalkCounts nb_walk_counts(const graph::Graph& g, int max_length)
{
    if (max_length < 1 || max_length > kWalkLengthCap)
        throw InputError("nb_walk_counts: length must lie in 1.." + std::to_string(kWalkLengthCap));
    if (2 * static_cast<std::size_t>(g.edge_count()) > kWalkArcCap)
        throw InputError("nb_walk_counts: " + std::to_string(2 * g.edge_count()) +
                         " arcs exceed the enumeration cap of " + std::to_string(kWalkArcCap));
    auto by_trace = nb_walk_counts_by_trace(g, max_length);
    const auto by_dfs = nb_walk_counts_by_enumeration(g, max_length);
    for (std::size_t i = 0; i < by_trace.size(); ++i)
        if (by_trace[i] != by_dfs[i])
            throw VerificationError("nb_walk_counts: N_" + std::to_string(i + 1) + " is " +
                                    std::to_string(by_trace[i]) + " by trace but " +
                                    std::to_string(by_dfs[i]) + " by enumeration");
    return {std::move(by_trace)};
}

/// s_m = m [u^m] log P(u) for P(0) = 1, m = 1..max_length (Newton's identities).
inline std::vector<double> log_series_weighted(const std::vector<double>& p, int max_length)
{
    if (p.empty() || p.front() != 1.0)
        throw InputError("log_series: constant coefficient must be 1");
    auto coef = [&](int i) { return i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : 0.0; };
    std::vector<double> s(static_cast<std::size_t>(max_length) + 1, 0.0);
    for (int m = 1; m <= max_length; ++m) {
        double v = m * coef(m);
        for (int j = 1; j < m; ++j)
            v -= s[static_cast<std::size_t>(j)] * coef(m - j);
        s[static_cast<std::size_t>(m)] = v;
    }
    return {s.begin() + 1, s.end()};
}

/// 1/P(u) modulo u^{order+1}.
inline std::vector<double> series_inverse(const std::vector<double>& p, int order)
{
    if (p.empty() || p.front() == 0.0)
        throw InputError("series_inverse: constant coefficient must be non-zero");
    auto coef = [&](int i) { return i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : 0.0; };
    std::vector<double> q(static_cast<std::size_t>(order) + 1, 0.0);
    q[0] = 1.0 / p.front();
    for (int m = 1; m <= order; ++m) {
        double v = 0.0;
        for (int j = 1; j <= m; ++j)
            v += coef(j) * q[static_cast<std::size_t>(m - j)];
        q[static_cast<std::size_t>(m)] = -v / p.front();
    }
    return q;
}

struct EulerProduct {
    int max_length = 0;
    /// prime_classes[m] = number of prime reduced cycle classes of length m.
    std::vector<int> prime_classes;
    /// prod (1 - u^{|C|})^{-1} modulo u^{max_length+1}.
    std::vector<double> series;
};

namespace detail {

inline std::size_t minimal_period(const std::vector<std::size_t>& w)
{
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0)
            continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = w[i] == w[(i + p) % n];
        if (ok)
            return p;
    }
    return n;
}

inline std::vector<std::size_t> canonical_rotation(const std::vector<std::size_t>& w)
{
    std::vector<std::size_t> best = w;
    std::vector<std::size_t> rot = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best)
            best = rot;
    }
    return best;
}

} // namespace detail

/// Truncated Euler product over prime reduced cycle classes: cycles are
/// cyclically non-backtracking arc sequences, classes are rotation orbits,
/// primes have minimal period equal to their length.
inline EulerProduct prime_cycle_product(const graph::Graph& g, int max_length)
{
    if (max_length < 1 || max_length > kEulerLengthCap)
        throw InputError("prime_cycle_product: length must lie in 1.." + std::to_string(kEulerLengthCap));
    if (2 * static_cast<std::size_t>(g.edge_count()) > kEulerArcCap)
        throw InputError("prime_cycle_product: " + std::to_string(2 * g.edge_count()) +
                         " arcs exceed the cap of " + std::to_string(kEulerArcCap));

    const auto ctx = detail::walk_context(g);
    std::set<std::vector<std::size_t>> classes;
    detail::for_each_closed_walk(ctx, max_length, [&](const std::vector<std::size_t>& w) {
        if (detail::minimal_period(w) == w.size())
            classes.insert(detail::canonical_rotation(w));
    });

    EulerProduct out;
    out.max_length = max_length;
    out.prime_classes.assign(static_cast<std::size_t>(max_length) + 1, 0);
    for (const auto& c : classes)
        ++out.prime_classes[c.size()];

    out.series.assign(static_cast<std::size_t>(max_length) + 1, 0.0);
    out.series[0] = 1.0;
    for (int len = 1; len <= max_length; ++len) {
        // Multiply by (1 - u^len)^{-1} = 1 + u^len + u^{2 len} + ... once per class.
        for (int c = 0; c < out.prime_classes[static_cast<std::size_t>(len)]; ++c)
            for (int i = len; i <= max_length; ++i)
                out.series[static_cast<std::size_t>(i)] += out.series[static_cast<std::size_t>(i - len)];
    }
    return out;
}

/// Multiplicity of x as a root of p: the number of leading derivatives that
/// vanish relative to the magnitude of their terms.
inline int root_multiplicity(const std::vector<double>& p, Complex x, double rel_tol = 1e-7)
{
    std::vector<Complex> d(p.begin(), p.end());
    int mult = 0;
    while (d.size() > 1) {
        Complex value(0.0, 0.0);
        double magnitude = 0.0;
        Complex power(1.0, 0.0);
        for (const auto& c : d) {
            value += c * power;
            magnitude += std::abs(c) * std::abs(power);
            power *= x;
        }
        if (std::abs(value) > rel_tol * std::max(magnitude, 1e-300))
            break;
        ++mult;
        std::vector<Complex> next(d.size() - 1);
        for (std::size_t i = 1; i < d.size(); ++i)
            next[i - 1] = d[i] * static_cast<double>(i);
        d = std::move(next);
    }
    return mult;
}

/// Support of sigma(U+) for a connected k-regular graph:
/// mu/2 ± sqrt(mu^2 - 4(k-1))/2 over the adjacency spectrum, plus ±1 when
/// |E| > |V| (and -1 when bipartite).
inline std::vector<Complex> nonbacktracking_support(const graph::Graph& g)
{
    const int k = graph::require_connected_regular(g, 2, "nonbacktracking_support");
    const auto inv = graph::graph_invariants(g);
    const auto mu = linalg::eig_hermitian(linalg::to_complex(graph::adjacency(g))).real_parts();
    std::vector<Complex> out;
    for (double m : mu) {
        const Complex root = std::sqrt(Complex(m * m - 4.0 * (k - 1.0), 0.0));
        out.push_back((m + root) / 2.0);
        out.push_back((m - root) / 2.0);
    }
    const int m_minus = inv.bipartite ? 1 : 0;
    if (g.edge_count() - g.vertex_count() + 1 > 0)
        out.emplace_back(1.0, 0.0);
    if (g.edge_count() - g.vertex_count() + m_minus > 0)
        out.emplace_back(-1.0, 0.0);
    return out;
}

/// Total multiplicity of the reciprocal polynomial's roots accounted for by
/// u = 1/lambda over distinct lambda in `support`; equals the degree exactly
/// when every root lies in the support.
inline int roots_accounted(const ZetaPolynomial& z, const std::vector<Complex>& support, double merge = 1e-7)
{
    std::vector<Complex> distinct;
    for (const auto& s : support) {
        if (std::abs(s) == 0.0)
            continue;
        bool seen = false;
        for (const auto& d : distinct)
            seen = seen || std::abs(d - s) <= merge;
        if (!seen)
            distinct.push_back(s);
    }
    int total = 0;
    for (const auto& lambda : distinct)
        total += root_multiplicity(z.coefficients, 1.0 / lambda);
    return total;
}

} // namespace chiral::zeta
