// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

// The invariant suite: every property the library promises, run on the
// built-in catalog and on seeded random instances.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chiral_spectra/chiral.hpp"
#include "chiral_spectra/error.hpp"
#include "chiral_spectra/graph.hpp"
#include "chiral_spectra/mko.hpp"
#include "chiral_spectra/random_pairs.hpp"
#include "chiral_spectra/spectral.hpp"
#include "chiral_spectra/walks.hpp"
#include "chiral_spectra/zeta.hpp"

namespace chiral::verify {

using linalg::Complex;

struct VerifyOptions {
    std::uint64_t seed = 42;
    int random_pairs = 100;
    double tol = spectral::kDefaultMatchTolerance;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifySummary {
    std::vector<CheckResult> checks;

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    const CheckResult* first_failure() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return &c;
        return nullptr;
    }

    nlohmann::json to_json(const VerifyOptions& opt) const
    {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : checks)
            list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        const auto* fail = first_failure();
        return {{"seed", opt.seed},
                {"random_pairs", opt.random_pairs},
                {"tol", opt.tol},
                {"checks", std::move(list)},
                {"total", checks.size()},
                {"passed", passed()},
                {"first_failure", fail ? nlohmann::json(fail->name) : nlohmann::json(nullptr)}};
    }
};

/// Distance between two 2-element multisets.
inline double multiset_distance2(const std::array<Complex, 2>& x, const std::array<Complex, 2>& y)
{
    const double same = std::max(std::abs(x[0] - y[0]), std::abs(x[1] - y[1]));
    const double swap = std::max(std::abs(x[0] - y[1]), std::abs(x[1] - y[0]));
    return std::min(same, swap);
}

/// Clipping of [m, M] against [-1, 1], recomputed without the closed-form code.
inline walks::MkoRegime expected_regime(double m, double M)
{
    const bool circle = std::max(m, -1.0) <= std::min(M, 1.0);
    const bool excess = m < -1.0 || M > 1.0;
    if (circle && !excess)
        return walks::MkoRegime::circle_only;
    return circle ? walks::MkoRegime::mixed : walks::MkoRegime::real_only;
}

/// Containment of every eigenvalue of a correlated walk in
/// [-1,-r] ∪ [r,1] (∪ the circle of radius sqrt(r) when p < 1/k).
inline double correlated_containment_slack(const std::vector<Complex>& ev, double p, int k)
{
    const double r = walks::CorrelatedParams{p, k}.r();
    const bool circle = p < 1.0 / k;
    double worst = 0.0;
    for (const auto& z : ev) {
        const double real_gap = std::max(std::abs(z.imag()),
                                         std::max(r - std::abs(z.real()), std::abs(z.real()) - 1.0));
        double dist = std::max(real_gap, 0.0);
        if (circle)
            dist = std::min(dist, std::abs(std::abs(z) - std::sqrt(r)));
        worst = std::max(worst, dist);
    }
    return worst;
}

namespace detail {

inline std::string num(double x)
{
    std::ostringstream s;
    s.precision(3);
    s << x;
    return s.str();
}

inline void run(VerifySummary& out, std::string name, const std::function<std::string(bool&)>& body)
{
    CheckResult r{std::move(name), false, {}};
    try {
        bool ok = true;
        r.detail = body(ok);
        r.passed = ok;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    out.checks.push_back(std::move(r));
}

inline std::string mapping_detail(const spectral::SpectrumReport& rep)
{
    std::string s = std::string(rep.match ? "match" : "mismatch") +
                    ", max pair distance " + num(rep.max_pair_distance) +
                    ", bound violations " +
                    std::to_string(rep.bounds.annulus.violations + rep.bounds.locus.violations +
                                   rep.bounds.resolvent.violations);
    if (!rep.notes.empty())
        s += "; " + rep.notes.front();
    return s;
}

} // namespace detail

inline void grover_checks(VerifySummary& out, const VerifyOptions& opt)
{
    const spectral::SpectralOptions so{opt.tol};
    for (const std::string name : {"k4", "k5", "k33", "petersen"}) {
        const auto g = graph::builtin(name);
        const auto inv = graph::graph_invariants(g);
        const int k = *inv.degree;

        detail::run(out, "grover/" + name + "/mapping", [&](bool& ok) {
            const auto rep = spectral::verify_mapping(walks::grover_positive_support(g), so, "grover");
            ok = rep.passed();
            return detail::mapping_detail(rep);
        });
        detail::run(out, "grover/" + name + "/multiplicities", [&](bool& ok) {
            const auto md = multiplicity_data(walks::grover_positive_support(g));
            const int bip = inv.bipartite ? 1 : 0;
            const int excess = g.edge_count() - g.vertex_count();
            ok = md.m_plus == 1 && md.m_minus == bip && md.M_plus == excess + md.m_plus &&
                 md.M_minus == excess + md.m_minus && md.accounting_holds();
            return "m+=" + std::to_string(md.m_plus) + " m-=" + std::to_string(md.m_minus) +
                   " M+=" + std::to_string(md.M_plus) + " M-=" + std::to_string(md.M_minus);
        });
        detail::run(out, "grover/" + name + "/discriminant", [&](bool& ok) {
            const auto p = walks::grover_positive_support(g);
            const double err = linalg::max_abs(p.T() - walks::isotropic_transition(g));
            ok = err <= 1e-14;
            return "max |T - A/k| = " + detail::num(err);
        });
        detail::run(out, "grover/" + name + "/positive_support", [&](bool& ok) {
            const auto nb = zeta::nonbacktracking_matrix(g);
            const auto support = walks::positive_support(walks::grover_evolution(g));
            const double err =
                linalg::max_abs(walks::grover_positive_support(g).U() - linalg::to_complex(nb));
            ok = support == nb && err <= 1e-12 && k >= 3;
            return "max |U - (B'-J)| = " + detail::num(err);
        });
    }
}

inline void zeta_checks(VerifySummary& out)
{
    for (const std::string name : {"c3", "c4", "k4", "k5", "k33", "petersen"}) {
        const auto g = graph::builtin(name);
        detail::run(out, "zeta/" + name + "/bass", [&](bool& ok) {
            const auto z = zeta::zeta_reciprocal(g);
            const double res = zeta::coefficient_residue(z, zeta::bass_form(g));
            ok = res <= 1e-9 && z.degree() == 2 * static_cast<std::size_t>(g.edge_count()) &&
                 z.coefficients.front() == 1.0;
            return "coefficient residue " + detail::num(res);
        });
        detail::run(out, "zeta/" + name + "/roots", [&](bool& ok) {
            const auto z = zeta::zeta_reciprocal(g);
            const int acc = zeta::roots_accounted(z, zeta::nonbacktracking_support(g));
            const double det = linalg::to_complex(zeta::nonbacktracking_matrix(g)).determinant().real();
            const double lead = z.coefficients.back();
            ok = acc == static_cast<int>(z.degree()) &&
                 std::abs(std::abs(lead) - std::abs(det)) <= 1e-6 * std::max(1.0, std::abs(det));
            return std::to_string(acc) + " of " + std::to_string(z.degree()) + " roots in support";
        });
        if (2 * static_cast<std::size_t>(g.edge_count()) <= zeta::kWalkArcCap) {
            detail::run(out, "zeta/" + name + "/log_series", [&](bool& ok) {
                const int L = 8;
                const auto counts = zeta::nb_walk_counts(g, L).counts;
                const auto s = zeta::log_series_weighted(zeta::zeta_reciprocal(g).coefficients, L);
                ok = true;
                for (int m = 0; m < L; ++m)
                    ok = ok && static_cast<double>(counts[static_cast<std::size_t>(m)]) ==
                                   std::round(-s[static_cast<std::size_t>(m)]) &&
                         std::abs(-s[static_cast<std::size_t>(m)] - std::round(-s[static_cast<std::size_t>(m)])) <= 1e-6;
                return "N_1..N_8 against -m [u^m] log det(I - uU+)";
            });
        }
        if (2 * static_cast<std::size_t>(g.edge_count()) <= zeta::kEulerArcCap) {
            detail::run(out, "zeta/" + name + "/euler", [&](bool& ok) {
                const int L = 6;
                const auto e = zeta::prime_cycle_product(g, L);
                const auto inv = zeta::series_inverse(zeta::zeta_reciprocal(g).coefficients, L);
                double worst = 0.0;
                for (int i = 0; i <= L; ++i)
                    worst = std::max(worst, std::abs(e.series[static_cast<std::size_t>(i)] -
                                                     inv[static_cast<std::size_t>(i)]));
                ok = worst == 0.0;
                return "Euler product vs 1/zeta mod u^7, worst " + detail::num(worst);
            });
        }
    }
}

inline void correlated_checks(VerifySummary& out, const VerifyOptions& opt)
{
    const spectral::SpectralOptions so{opt.tol};
    for (const std::string name : {"c4", "k4", "petersen"}) {
        const auto g = graph::builtin(name);
        const int k = *graph::graph_invariants(g).degree;
        for (int i = 0; i <= 4; ++i) {
            const double p = 0.25 * i;
            detail::run(out, "correlated/" + name + "/p=" + detail::num(p), [&](bool& ok) {
                const auto pair = walks::correlated_walk(g, p);
                const auto direct = walks::correlated_transition(g, p);
                const double build_err = linalg::max_abs(pair.U() - direct);
                const auto ev = linalg::eig_general(direct).eigenvalues;
                const double slack = correlated_containment_slack(ev, p, k);
                ok = build_err <= 1e-14 && slack <= opt.tol;
                std::string detail = "containment distance " + detail::num(slack);
                const auto& f = pair.flags();
                if (f.proj_proper && f.s_proper && f.a_neq_b && f.ab_nonzero) {
                    const auto rep = spectral::verify_mapping(pair, so, "correlated");
                    ok = ok && rep.passed();
                    detail += "; " + detail::mapping_detail(rep);
                } else {
                    detail += "; mapping skipped (" + f.first_failure() + ")";
                }
                return detail;
            });
        }
    }
}

inline void random_pair_checks(VerifySummary& out, const VerifyOptions& opt)
{
    std::mt19937_64 rng(opt.seed);
    std::vector<ChiralPair> pairs;
    for (int i = 0; i < opt.random_pairs; ++i)
        pairs.push_back(random::random_pair(rng));

    detail::run(out, "random/normality", [&](bool& ok) {
        double worst = 0.0;
        for (const auto& p : pairs) {
            const auto nd = normality_defect(p);
            const double nu = linalg::operator_norm(p.U());
            worst = std::max(worst, nd.residual / (1.0 + nu * nu));
        }
        ok = worst <= 1e-12;
        return "worst scaled residual " + detail::num(worst);
    });
    detail::run(out, "random/chiral_symmetry", [&](bool& ok) {
        double worst = 0.0;
        for (const auto& p : pairs)
            worst = std::max(worst, chiral_symmetry_residual(p) / (1.0 + linalg::operator_norm(p.U())));
        ok = worst <= 1e-12;
        return "worst ||SUS - U*|| / (1 + ||U||) = " + detail::num(worst);
    });
    detail::run(out, "random/norm", [&](bool& ok) {
        double worst = 0.0;
        for (const auto& p : pairs) {
            const auto nc = norm_check(p);
            worst = std::max(worst, std::abs(nc.norm_u - nc.expected) / nc.expected);
        }
        ok = worst <= 1e-10;
        return "worst relative | ||U|| - max(|a|,|b|) | = " + detail::num(worst);
    });
    detail::run(out, "random/mapping", [&](bool& ok) {
        int failures = 0;
        std::string first;
        const spectral::SpectralOptions so{opt.tol};
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            try {
                const auto rep = spectral::verify_mapping(pairs[i], so, "random");
                if (!rep.passed()) {
                    ++failures;
                    if (first.empty())
                        first = "pair " + std::to_string(i) + ": " + detail::mapping_detail(rep);
                }
            } catch (const std::exception& e) {
                ++failures;
                if (first.empty())
                    first = "pair " + std::to_string(i) + ": " + e.what();
            }
        }
        ok = failures == 0;
        return std::to_string(failures) + " of " + std::to_string(pairs.size()) + " failed" +
               (first.empty() ? "" : "; " + first);
    });
    detail::run(out, "random/joukowsky", [&](bool& ok) {
        std::uniform_real_distribution<double> coef(-3.0, 3.0);
        std::uniform_real_distribution<double> tdist(-1.0, 1.0);
        double worst_round = 0.0;
        double worst_vieta = 0.0;
        for (int i = 0; i < 1000; ++i) {
            double a = 0.0;
            double b = 0.0;
            do {
                a = coef(rng);
                b = coef(rng);
            } while (std::abs(a - b) < 0.05 || std::abs(a + b) < 0.05 || std::abs(a * b) < 0.05);
            const double t = tdist(rng);
            const spectral::JoukowskyParams jp(a, b);
            const auto r = spectral::joukowsky_inverse(jp, t);
            const double scale = std::max(std::abs(t), 1.0);
            worst_round = std::max({worst_round, std::abs(spectral::joukowsky(jp, r.plus) - t) / scale,
                                    std::abs(spectral::joukowsky(jp, r.minus) - t) / scale});
            const double prod = std::abs(r.plus * r.minus + a * b) / std::abs(a * b);
            const double sum = std::abs(r.plus + r.minus - (a - b) * t) /
                               std::max(std::abs((a - b) * t), std::abs(a - b));
            worst_vieta = std::max({worst_vieta, prod, sum});
        }
        ok = worst_round <= 1e-10 && worst_vieta <= 1e-12;
        return "round trip " + detail::num(worst_round) + ", Vieta " + detail::num(worst_vieta);
    });
}

inline void mko_checks(VerifySummary& out, const VerifyOptions& opt)
{
    const double quarter = std::numbers::pi / 4.0;
    std::mt19937_64 rng(opt.seed ^ 0x6d6b6fULL);

    detail::run(out, "mko/unimodular", [&](bool& ok) {
        std::uniform_real_distribution<double> angle(0.1, std::numbers::pi - 0.1);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
        std::vector<walks::MkoParams> params{{0.0, 0.0, quarter, quarter}};
        for (int i = 0; i < 4; ++i)
            params.push_back({0.0, phase(rng), angle(rng), angle(rng)});
        double worst = 0.0;
        for (const auto& mp : params)
            for (const auto& s : walks::mko_sample(mp, 512))
                for (const auto& z : s.eigenvalues)
                    worst = std::max(worst, std::abs(std::abs(z) - 1.0));
        ok = worst <= 1e-10;
        return "max ||lambda| - 1| = " + detail::num(worst);
    });
    for (double gamma : {0.2, 0.5, 0.8, 1.0, 1.5}) {
        detail::run(out, "mko/gamma=" + detail::num(gamma), [&](bool& ok) {
            const walks::MkoParams mp{gamma, 0.0, quarter, quarter};
            const auto set = walks::mko_closed_form(mp);
            double worst = 0.0;
            for (const auto& s : walks::mko_sample(mp, 512))
                for (const auto& z : s.eigenvalues)
                    worst = std::max(worst, walks::distance_to_set(set, z));
            const auto regime = expected_regime(mp.m_gamma(), mp.M_gamma());
            ok = worst <= 1e-6 && regime == set.regime;
            return std::string(walks::to_string(set.regime)) + ", max distance " + detail::num(worst);
        });
    }
    detail::run(out, "mko/factors", [&](bool& ok) {
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        std::uniform_real_distribution<double> g(0.0, 1.5);
        double worst_eig = 0.0;
        double worst_det = 0.0;
        double worst_s = 0.0;
        for (int i = 0; i < 64; ++i) {
            const walks::MkoParams mp{g(rng), angle(rng), angle(rng), angle(rng)};
            const double xi = angle(rng);
            const auto f = walks::mko_equivalence_factors(mp, xi);
            worst_eig = std::max(worst_eig,
                                 multiset_distance2(walks::eigenvalues2(walks::mko_momentum_matrix(mp, xi)),
                                                    walks::eigenvalues2(f.s_mko * f.c_mko)));
            worst_det = std::max(worst_det, std::abs(f.c_mko.determinant() + 1.0));
            worst_s = std::max({worst_s, linalg::max_abs(f.s_mko - f.s_mko.adjoint()),
                                linalg::max_abs(f.s_mko * f.s_mko - walks::Matrix2::Identity()),
                                linalg::max_abs(f.c_mko - f.c_mko.adjoint())});
        }
        ok = worst_eig <= 1e-10 && worst_det <= 1e-12 && worst_s <= 1e-12;
        return "eigenvalues " + detail::num(worst_eig) + ", det C + 1 " + detail::num(worst_det) +
               ", structure " + detail::num(worst_s);
    });
    detail::run(out, "mko/ring", [&](bool& ok) {
        const walks::MkoParams mp{0.5, 0.0, quarter, quarter};
        const auto set = walks::mko_closed_form(mp);
        const auto rep = spectral::verify_mapping(walks::mko_ring_pair(mp, 8), {opt.tol}, "mko");
        const auto ev = linalg::eig_general(walks::mko_ring_evolution(mp, 8)).eigenvalues;
        double worst = 0.0;
        for (const auto& z : ev)
            worst = std::max(worst, walks::distance_to_set(set, z));
        ok = rep.passed() && worst <= 1e-6;
        return detail::mapping_detail(rep) + "; ring eigenvalues within " + detail::num(worst) + " of the set";
    });
}

inline void example_checks(VerifySummary& out, const VerifyOptions& opt)
{
    detail::run(out, "example_homogeneous/normality", [&](bool& ok) {
        const double s = 1.0 / std::sqrt(2.0);
        const std::vector<std::pair<double, Complex>> shifts{{1.0, 0.0}, {0.8, 0.6}, {0.0, 1.0}};
        const std::vector<Eigen::Vector2cd> phis{Eigen::Vector2cd(1.0, 0.0), Eigen::Vector2cd(0.0, 1.0),
                                                 Eigen::Vector2cd(s, s)};
        ok = true;
        int normal = 0;
        for (const auto& [p, q] : shifts) {
            for (const auto& phi : phis) {
                const auto pair = walks::example_homogeneous(phi, p, q, 6, 2.0, -0.5);
                const ComplexMatrix& u = pair.U();
                const double comm = linalg::operator_norm(u * u.adjoint() - u.adjoint() * u);
                const bool expect_normal = q == 0.0 && std::abs(std::conj(phi(0)) * phi(1)) == 0.0;
                ok = ok && (expect_normal ? comm < 1e-12 : comm > 1e-3);
                normal += expect_normal ? 1 : 0;
            }
        }
        return std::to_string(normal) + " of 9 grid points normal, as expected";
    });
    struct Inst {
        double alpha;
        Complex beta;
        int n;
    };
    for (const auto& inst : {Inst{1.0, 0.0, 4}, Inst{0.6, 0.8, 6}, Inst{0.3, Complex(0.4, 0.2), 8}}) {
        std::ostringstream nm;
        nm << "example_inhomogeneous/alpha=" << inst.alpha << ",beta=" << inst.beta.real()
           << (inst.beta.imag() >= 0 ? "+" : "") << inst.beta.imag() << "i,N=" << inst.n;
        detail::run(out, nm.str(), [&](bool& ok) {
            const auto pair = walks::example_inhomogeneous(inst.alpha, inst.beta, inst.n);
            const double coin_err =
                linalg::max_abs(pair.C() - walks::inhomogeneous_coin(inst.alpha, inst.beta, inst.n));
            const auto rep = spectral::verify_mapping(pair, {opt.tol}, "inhom-example");
            ok = rep.passed() && coin_err <= 1e-12;
            return detail::mapping_detail(rep);
        });
    }
}

inline VerifySummary run_verify_suite(const VerifyOptions& opt)
{
    if (opt.random_pairs < 0)
        throw InputError("verify: random pair count must be non-negative");
    if (!(opt.tol > 0.0))
        throw InputError("verify: tolerance must be positive");
    VerifySummary out;
    grover_checks(out, opt);
    zeta_checks(out);
    correlated_checks(out, opt);
    random_pair_checks(out, opt);
    mko_checks(out, opt);
    example_checks(out, opt);
    return out;
}

} // namespace chiral::verify
