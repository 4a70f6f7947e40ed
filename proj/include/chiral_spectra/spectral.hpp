// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

// Spectral mapping for U = S C.
//
// The scaled Joukowsky transform
//
//     phi_{a,b}(z) = (z - ab/z) / (a - b)
//
// carries the point spectrum of U (away from +-a, +-b) onto the spectrum of
// the discriminant T. Each eigenvalue t of T with t != +-1 lifts to the two
// roots of  lambda^2 - (a-b) t lambda - ab = 0,  each with geometric
// multiplicity dim ker(T - t). On top of these come the "birth" eigenvalues
//
//     a  with multiplicity m+ = dim ker(T - 1)
//    -a  with multiplicity m- = dim ker(T + 1)
//    -b  with multiplicity M+ = dim [ker d ∩ ker(S + 1)]
//     b  with multiplicity M- = dim [ker d ∩ ker(S - 1)]
//
// This header predicts that spectrum, computes it directly, and compares.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chiral_spectra/chiral.hpp"
#include "chiral_spectra/error.hpp"
#include "chiral_spectra/linalg.hpp"

namespace chiral::spectral {

using linalg::Complex;
using linalg::ComplexMatrix;

inline constexpr double kDefaultMatchTolerance = 1e-8;

struct SpectralOptions {
    /// Matching and clustering tolerance, relative to the spectral radius.
    double tol = kDefaultMatchTolerance;
    /// Relative singular-value threshold for kernel dimensions.
    double rank_tol = linalg::kDefaultRankTolerance;
    std::size_t dimension_cap = linalg::kDefaultDimensionCap;
};

/// Parameters of phi_{a,b}. Requires a != b and ab != 0; a == -b is allowed
/// and reduces phi to a rescaled classical Joukowsky map.
class JoukowskyParams {
public:
    JoukowskyParams(double a, double b) : a_(a), b_(b)
    {
        const double scale = std::max({std::abs(a), std::abs(b), 1.0});
        if (std::abs(a - b) <= kStructureTolerance * scale)
            throw InputError("joukowsky: a = b makes the transform undefined");
        if (std::abs(a * b) <= kStructureTolerance * scale * scale)
            throw InputError("joukowsky: ab = 0");
    }

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    /// sqrt(-ab) when ab < 0.
    std::optional<double> circle_radius() const
    {
        if (a_ * b_ < 0)
            return std::sqrt(-a_ * b_);
        return std::nullopt;
    }

private:
    double a_;
    double b_;
};

inline Complex joukowsky(const JoukowskyParams& params, Complex z)
{
    if (z == Complex(0.0, 0.0))
        throw InputError("joukowsky: z = 0 is outside the domain");
    const double a = params.a();
    const double b = params.b();
    return (z - a * b / z) / (a - b);
}

struct JoukowskyRoots {
    Complex plus;
    Complex minus;
    bool degenerate = false;
};

/// Both solutions of phi_{a,b}(lambda) = t, i.e.
/// lambda = ((a-b) t ± sqrt((a-b)^2 t^2 + 4ab)) / 2.
inline JoukowskyRoots joukowsky_inverse(const JoukowskyParams& params, double t)
{
    if (!std::isfinite(t))
        throw InputError("joukowsky_inverse: t must be finite");
    const double a = params.a();
    const double b = params.b();
    const double linear = (a - b) * t;
    const double disc = linear * linear + 4.0 * a * b;
    const double scale = (a - b) * (a - b) * t * t + 4.0 * std::abs(a * b);

    JoukowskyRoots r;
    r.degenerate = std::abs(disc) <= 1e-12 * std::max(scale, 1.0);
    if (disc >= 0.0) {
        // Real roots; compute the larger one first and the other by Vieta.
        const double s = std::sqrt(disc);
        if (linear >= 0.0) {
            r.plus = Complex((linear + s) / 2.0, 0.0);
            r.minus = Complex(-a * b / r.plus.real(), 0.0);
        } else {
            r.minus = Complex((linear - s) / 2.0, 0.0);
            r.plus = Complex(-a * b / r.minus.real(), 0.0);
        }
    } else {
        const double s = std::sqrt(-disc);
        r.plus = Complex(linear / 2.0, s / 2.0);
        r.minus = Complex(linear / 2.0, -s / 2.0);
    }
    return r;
}

enum class AtomOrigin {
    inherited,
    birth_a_plus,    ///< value a, multiplicity m+
    birth_a_minus,   ///< value -a, multiplicity m-
    birth_b_plus,    ///< value -b, multiplicity M+
    birth_b_minus,   ///< value b, multiplicity M-
    birth_merged_plus,   ///< a == -b: value a, multiplicity m+ + M+
    birth_merged_minus,  ///< a == -b: value -a, multiplicity m- + M-
};

inline const char* to_string(AtomOrigin o)
{
    switch (o) {
    case AtomOrigin::inherited: return "inherited";
    case AtomOrigin::birth_a_plus: return "birth_a_plus";
    case AtomOrigin::birth_a_minus: return "birth_a_minus";
    case AtomOrigin::birth_b_plus: return "birth_b_plus";
    case AtomOrigin::birth_b_minus: return "birth_b_minus";
    case AtomOrigin::birth_merged_plus: return "birth_a_plus+birth_b_plus";
    case AtomOrigin::birth_merged_minus: return "birth_a_minus+birth_b_minus";
    }
    return "unknown";
}

struct SpectralAtom {
    Complex value;
    int multiplicity = 0;  ///< predicted geometric multiplicity
    AtomOrigin origin = AtomOrigin::inherited;
    double t_source = 0.0;  ///< phi_{a,b}(value); +-1 for birth atoms
    bool degenerate = false;
};

inline int geometric_total(const std::vector<SpectralAtom>& atoms)
{
    return std::accumulate(atoms.begin(), atoms.end(), 0,
                           [](int acc, const SpectralAtom& at) { return acc + at.multiplicity; });
}

struct RealCluster {
    double mean = 0.0;
    int size = 0;
};

/// Groups ascending reals whose consecutive gaps are <= width.
inline std::vector<RealCluster> cluster_sorted_reals(const std::vector<double>& sorted, double width)
{
    std::vector<RealCluster> out;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i + 1;
        double sum = sorted[i];
        while (j < sorted.size() && sorted[j] - sorted[j - 1] <= width) {
            sum += sorted[j];
            ++j;
        }
        out.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return out;
}

/// Predicted point spectrum of U. Requires d^*d != I, S != +-I, a != b and
/// ab != 0; when a == -b the birth atoms at a = -b and -a = b are merged.
inline std::vector<SpectralAtom> predicted_spectrum(const ChiralPair& p, const SpectralOptions& opt = {})
{
    const auto& f = p.flags();
    if (!(f.proj_proper && f.s_proper && f.a_neq_b && f.ab_nonzero))
        throw InputError("predicted_spectrum: assumption violated: " + f.first_failure());

    const JoukowskyParams params(p.a(), p.b());
    const auto m = p.T().rows();
    const auto t_values = linalg::eig_hermitian(p.T()).real_parts();
    const auto clusters = cluster_sorted_reals(t_values, 1e-8);

    std::vector<SpectralAtom> atoms;
    for (const auto& c : clusters) {
        if (std::abs(c.mean - 1.0) <= 1e-8 || std::abs(c.mean + 1.0) <= 1e-8)
            continue;
        const int mult = static_cast<int>(
            linalg::kernel_dimension(p.T() - c.mean * linalg::identity(m), opt.rank_tol));
        if (mult != c.size)
            throw NumericalError("predicted_spectrum: eigenvalue cluster of T at " +
                                 std::to_string(c.mean) + " has size " + std::to_string(c.size) +
                                 " but kernel dimension " + std::to_string(mult));
        const auto roots = joukowsky_inverse(params, c.mean);
        if (roots.degenerate) {
            atoms.push_back({Complex((p.a() - p.b()) * c.mean / 2.0, 0.0), mult,
                             AtomOrigin::inherited, c.mean, true});
        } else {
            atoms.push_back({roots.plus, mult, AtomOrigin::inherited, c.mean, false});
            atoms.push_back({roots.minus, mult, AtomOrigin::inherited, c.mean, false});
        }
    }

    const auto md = multiplicity_data(p, opt.rank_tol);
    auto birth = [&](double value, int mult, AtomOrigin origin, double t) {
        if (mult > 0)
            atoms.push_back({Complex(value, 0.0), mult, origin, t, false});
    };
    if (f.a_neq_minus_b) {
        birth(p.a(), md.m_plus, AtomOrigin::birth_a_plus, 1.0);
        birth(-p.a(), md.m_minus, AtomOrigin::birth_a_minus, -1.0);
        birth(-p.b(), md.M_plus, AtomOrigin::birth_b_plus, 1.0);
        birth(p.b(), md.M_minus, AtomOrigin::birth_b_minus, -1.0);
    } else {
        birth(p.a(), md.m_plus + md.M_plus, AtomOrigin::birth_merged_plus, 1.0);
        birth(-p.a(), md.m_minus + md.M_minus, AtomOrigin::birth_merged_minus, -1.0);
    }
    return atoms;
}

struct DirectCluster {
    Complex value;      ///< cluster mean
    int algebraic = 0;  ///< number of eigenvalues in the cluster
    int geometric = 0;  ///< dim ker(U - value)
};

struct DirectSpectrum {
    std::vector<Complex> eigenvalues;  ///< all n values from the general solver
    std::vector<DirectCluster> clusters;
    double spectral_radius = 0.0;
    double cluster_width = 0.0;
};

/// A point around which eigenvalues are pooled before ordinary clustering,
/// used where a Jordan block is expected to split a multiple eigenvalue.
struct MergeHint {
    Complex center;
    double radius = 0.0;
};

class ClusteringAmbiguity : public NumericalError {
public:
    using NumericalError::NumericalError;
};

namespace detail {

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i)
{
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

} // namespace detail

/// Eigenvalues of u grouped by single linkage at width tol * spectral radius,
/// with the geometric multiplicity of each group. Throws ClusteringAmbiguity
/// when two groups sit closer than ten widths.
inline DirectSpectrum direct_spectrum_of(const ComplexMatrix& u, const SpectralOptions& opt = {},
                                         const std::vector<MergeHint>& hints = {})
{
    DirectSpectrum out;
    out.eigenvalues = linalg::eig_general(u, opt.dimension_cap).eigenvalues;
    const auto& ev = out.eigenvalues;
    const std::size_t n = ev.size();
    for (const auto& z : ev)
        out.spectral_radius = std::max(out.spectral_radius, std::abs(z));
    out.cluster_width = opt.tol * (out.spectral_radius > 0 ? out.spectral_radius : 1.0);

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto unite = [&](std::size_t i, std::size_t j) {
        parent[detail::find_root(parent, i)] = detail::find_root(parent, j);
    };
    for (const auto& h : hints) {
        std::optional<std::size_t> first;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(ev[i] - h.center) <= h.radius) {
                if (first)
                    unite(i, *first);
                else
                    first = i;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(ev[i] - ev[j]) <= out.cluster_width)
                unite(i, j);

    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = detail::find_root(parent, i);
        if (slot[r] == n) {
            slot[r] = groups.size();
            groups.emplace_back();
        }
        groups[slot[r]].push_back(i);
    }

    const auto dim = u.rows();
    for (const auto& grp : groups) {
        Complex sum(0.0, 0.0);
        for (std::size_t i : grp)
            sum += ev[i];
        DirectCluster c;
        c.value = sum / static_cast<double>(grp.size());
        c.algebraic = static_cast<int>(grp.size());
        c.geometric = static_cast<int>(
            linalg::kernel_dimension(u - c.value * linalg::identity(dim), opt.rank_tol));
        out.clusters.push_back(c);
    }
    std::sort(out.clusters.begin(), out.clusters.end(), [](const auto& x, const auto& y) {
        if (x.value.real() != y.value.real())
            return x.value.real() < y.value.real();
        return x.value.imag() < y.value.imag();
    });

    // Hinted groups are exempt: their members are expected to straddle.
    for (std::size_t i = 0; i < out.clusters.size(); ++i) {
        for (std::size_t j = i + 1; j < out.clusters.size(); ++j) {
            const double gap = std::abs(out.clusters[i].value - out.clusters[j].value);
            if (gap <= 10.0 * out.cluster_width) {
                bool hinted = false;
                for (const auto& h : hints)
                    hinted = hinted || std::abs(out.clusters[i].value - h.center) <= h.radius ||
                             std::abs(out.clusters[j].value - h.center) <= h.radius;
                if (!hinted)
                    throw ClusteringAmbiguity(
                        "direct_spectrum: eigenvalue groups at distance " + std::to_string(gap) +
                        " are within ten cluster widths (" + std::to_string(out.cluster_width) + ")");
            }
        }
    }
    return out;
}

inline DirectSpectrum direct_spectrum(const ChiralPair& p, const SpectralOptions& opt = {})
{
    return direct_spectrum_of(p.U(), opt);
}

struct BoundCheck {
    int checked = 0;
    int violations = 0;
    /// Most negative slack seen (negative means violated).
    double worst_slack = std::numeric_limits<double>::infinity();
    bool passed() const noexcept { return violations == 0; }

    void record(double slack, double tol)
    {
        ++checked;
        worst_slack = std::min(worst_slack, slack);
        if (slack < -tol)
            ++violations;
    }
};

struct BoundReport {
    BoundCheck annulus;
    BoundCheck locus;
    BoundCheck resolvent;
    bool passed() const noexcept { return annulus.passed() && locus.passed() && resolvent.passed(); }
};

/// Twenty deterministic sample points outside the annulus
/// min(|a|,|b|) <= |z| <= max(|a|,|b|), alternating between the outer and the
/// inner region (inner points are omitted when min(|a|,|b|) = 0).
inline std::vector<Complex> default_resolvent_samples(double a, double b, int count = 20)
{
    const double lo = std::min(std::abs(a), std::abs(b));
    const double hi = std::max(std::abs(a), std::abs(b));
    std::vector<Complex> z;
    for (int j = 0; j < count; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / count + 0.1;
        double radius;
        if (j % 2 == 0 || lo == 0.0)
            radius = hi * (1.05 + 0.15 * (j / 2)) + 0.01;
        else
            radius = lo * (0.05 + 0.09 * (j / 2));
        z.push_back(std::polar(radius, angle));
    }
    return z;
}

/// Annulus and locus containment of the direct eigenvalues, and the
/// resolvent lower bound sigma_min(U - z) >= |c - |z|| at each sample z
/// outside the annulus (c the nearer of min/max(|a|,|b|)).
inline BoundReport check_bounds(const ChiralPair& p, const std::vector<Complex>& z_samples,
                                double tol = kDefaultMatchTolerance,
                                std::optional<std::vector<Complex>> eigenvalues = std::nullopt)
{
    const double a = p.a();
    const double b = p.b();
    const double lo = std::min(std::abs(a), std::abs(b));
    const double hi = std::max(std::abs(a), std::abs(b));
    const auto ev = eigenvalues ? std::move(*eigenvalues) : linalg::eig_general(p.U()).eigenvalues;

    BoundReport r;
    for (const auto& z : ev) {
        const double mod = std::abs(z);
        r.annulus.record(std::min(mod - lo, hi - mod), tol);
        double slack;
        if (a * b > 0) {
            slack = -std::abs(z.imag());
        } else {
            const double radius = std::sqrt(-a * b);
            slack = -std::min(std::abs(z.imag()), std::abs(mod - radius));
        }
        r.locus.record(slack, tol);
    }

    const auto n = p.U().rows();
    for (const auto& z : z_samples) {
        const double mod = std::abs(z);
        double c;
        if (mod > hi)
            c = hi;
        else if (mod < lo)
            c = lo;
        else
            continue;
        const double sigma = linalg::smallest_singular_value(p.U() - z * linalg::identity(n));
        r.resolvent.record(sigma - std::abs(c - mod), tol);
    }
    return r;
}

struct Pairing {
    std::size_t atom = 0;     ///< index into predicted
    std::size_t cluster = 0;  ///< index into direct.clusters
    double distance = 0.0;
};

struct SpectrumReport {
    std::string model;
    int n = 0;
    double a = 0.0;
    double b = 0.0;
    std::vector<SpectralAtom> predicted;
    DirectSpectrum direct;
    std::vector<Pairing> pairings;
    bool match = false;
    std::vector<std::string> notes;
    BoundReport bounds;
    double max_pair_distance = 0.0;

    bool passed() const noexcept { return match && bounds.passed(); }
};

namespace detail {

/// Minimum-cost perfect assignment of rows to columns for an n x n cost
/// matrix (Hungarian algorithm, potentials form). Returns column of each row.
inline std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost)
{
    const std::size_t n = cost.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j])
                    continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> row_to_col(n, 0);
    for (std::size_t j = 1; j <= n; ++j)
        if (match[j] != 0)
            row_to_col[match[j] - 1] = j - 1;
    return row_to_col;
}

} // namespace detail

/// Pairs predicted atoms with direct clusters: greedy nearest-first within
/// width, escalating to an optimal assignment when some value has more than
/// one candidate. Fills report.pairings, report.match and report.notes.
inline void compare_spectra(SpectrumReport& report)
{
    const auto& pred = report.predicted;
    const auto& clus = report.direct.clusters;
    const double width = report.direct.cluster_width;

    struct Candidate {
        double dist;
        std::size_t i, j;
    };
    std::vector<Candidate> cand;
    std::vector<int> pred_count(pred.size(), 0), clus_count(clus.size(), 0);
    for (std::size_t i = 0; i < pred.size(); ++i) {
        for (std::size_t j = 0; j < clus.size(); ++j) {
            const double dist = std::abs(pred[i].value - clus[j].value);
            if (dist <= width) {
                cand.push_back({dist, i, j});
                ++pred_count[i];
                ++clus_count[j];
            }
        }
    }
    const bool collision = std::any_of(pred_count.begin(), pred_count.end(), [](int c) { return c > 1; }) ||
                           std::any_of(clus_count.begin(), clus_count.end(), [](int c) { return c > 1; });

    std::vector<bool> pred_used(pred.size(), false), clus_used(clus.size(), false);
    report.pairings.clear();
    if (!collision) {
        std::sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) { return x.dist < y.dist; });
        for (const auto& c : cand) {
            if (pred_used[c.i] || clus_used[c.j])
                continue;
            pred_used[c.i] = clus_used[c.j] = true;
            report.pairings.push_back({c.i, c.j, c.dist});
        }
    } else {
        report.notes.push_back("matching collision: resolved by optimal assignment");
        const std::size_t size = std::max(pred.size(), clus.size());
        const double forbidden = 1e6 * (1.0 + report.direct.spectral_radius);
        std::vector<std::vector<double>> cost(size, std::vector<double>(size, forbidden));
        for (const auto& c : cand)
            cost[c.i][c.j] = c.dist;
        const auto assign = detail::hungarian(cost);
        for (std::size_t i = 0; i < pred.size(); ++i) {
            const std::size_t j = assign[i];
            if (j < clus.size() && cost[i][j] <= width) {
                pred_used[i] = clus_used[j] = true;
                report.pairings.push_back({i, j, cost[i][j]});
            }
        }
    }

    bool ok = true;
    report.max_pair_distance = 0.0;
    for (const auto& pr : report.pairings) {
        report.max_pair_distance = std::max(report.max_pair_distance, pr.distance);
        const auto& atom = pred[pr.atom];
        const auto& cl = clus[pr.cluster];
        if (atom.multiplicity != cl.geometric) {
            ok = false;
            report.notes.push_back("multiplicity mismatch at (" + std::to_string(atom.value.real()) +
                                   ", " + std::to_string(atom.value.imag()) + "): predicted " +
                                   std::to_string(atom.multiplicity) + ", geometric " +
                                   std::to_string(cl.geometric));
        }
        if (atom.degenerate)
            report.notes.push_back("degenerate root at t = " + std::to_string(atom.t_source) +
                                   ": algebraic multiplicity " + std::to_string(cl.algebraic) +
                                   " not compared");
    }
    auto nearest = [](Complex z, auto begin, auto end, auto value_of) {
        double best = std::numeric_limits<double>::infinity();
        for (auto it = begin; it != end; ++it)
            best = std::min(best, std::abs(z - value_of(*it)));
        return best;
    };
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (pred_used[i])
            continue;
        ok = false;
        const double d = nearest(pred[i].value, clus.begin(), clus.end(),
                                 [](const DirectCluster& c) { return c.value; });
        report.notes.push_back("unmatched predicted atom (" + std::to_string(pred[i].value.real()) +
                               ", " + std::to_string(pred[i].value.imag()) +
                               "), nearest direct value at distance " + std::to_string(d));
    }
    for (std::size_t j = 0; j < clus.size(); ++j) {
        if (clus_used[j])
            continue;
        ok = false;
        const double d = nearest(clus[j].value, pred.begin(), pred.end(),
                                 [](const SpectralAtom& a) { return a.value; });
        report.notes.push_back("unmatched direct eigenvalue (" + std::to_string(clus[j].value.real()) +
                               ", " + std::to_string(clus[j].value.imag()) +
                               "), nearest predicted atom at distance " + std::to_string(d));
    }
    report.match = ok;
}

/// Compares predicted atoms against the direct spectrum of an arbitrary
/// matrix u (normally p.U(); a perturbed copy serves as a negative control).
inline SpectrumReport verify_against(const ChiralPair& p, const ComplexMatrix& u,
                                     const SpectralOptions& opt = {}, std::string model = {})
{
    SpectrumReport report;
    report.model = std::move(model);
    report.n = static_cast<int>(u.rows());
    report.a = p.a();
    report.b = p.b();
    report.predicted = predicted_spectrum(p, opt);

    double radius = 0.0;
    for (const auto& at : report.predicted)
        radius = std::max(radius, std::abs(at.value));
    std::vector<MergeHint> hints;
    for (const auto& at : report.predicted)
        if (at.degenerate)
            hints.push_back({at.value, std::sqrt(opt.tol) * std::max(radius, 1.0)});

    report.direct = direct_spectrum_of(u, opt, hints);
    compare_spectra(report);
    report.bounds = check_bounds(p, default_resolvent_samples(p.a(), p.b()), opt.tol,
                                 report.direct.eigenvalues);
    return report;
}

inline SpectrumReport verify_mapping(const ChiralPair& p, const SpectralOptions& opt = {},
                                     std::string model = {})
{
    return verify_against(p, p.U(), opt, std::move(model));
}

} // namespace chiral::spectral
