// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Exit codes: 0 verified, 1 verification failed,
// 2 input error.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chiral_spectra.hpp"

namespace chiral::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

struct RunConfig {
    std::string command;
    std::string graph_path;
    std::string builtin;
    std::string model;
    double p = 0.0;
    double a = 0.0;
    double b = 0.0;
    double gamma = 0.0;
    double theta1 = std::numbers::pi / 4.0;
    double theta2 = std::numbers::pi / 4.0;
    double phi = 0.0;
    double alpha = 0.6;
    double beta = 0.8;
    double beta_im = 0.0;
    int ring = 0;
    int grid = 512;
    int L = 6;
    double tol = spectral::kDefaultMatchTolerance;
    std::uint64_t seed = 42;
    int random_pairs = 100;
    std::string range;
    std::string out;
    std::string format = "json";

    bool has_p = false;
    bool has_a = false;
    bool has_b = false;
    bool has_ring = false;
    bool has_range = false;
};

/// Text of a command's result in both formats.
struct Output {
    json doc;
    std::string csv;
    bool passed = false;
    std::string summary;
};

namespace detail {

inline double default_tolerance()
{
    const char* env = std::getenv("CHIRAL_SPECTRA_TOL");
    if (!env || !*env)
        return spectral::kDefaultMatchTolerance;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
        throw InputError(std::string("CHIRAL_SPECTRA_TOL is not a positive number: ") + env);
    return v;
}

inline graph::Graph load_graph(const RunConfig& cfg)
{
    if (!cfg.graph_path.empty() && !cfg.builtin.empty())
        throw InputError("give either --graph or --builtin, not both");
    if (!cfg.builtin.empty())
        return graph::builtin(cfg.builtin);
    if (cfg.graph_path.empty())
        throw InputError("a graph is required (--graph PATH or --builtin NAME)");
    std::ifstream in(cfg.graph_path);
    if (!in)
        throw InputError("cannot open graph file " + cfg.graph_path);
    return graph::parse_edge_list(in);
}

inline std::string graph_label(const RunConfig& cfg)
{
    return cfg.builtin.empty() ? cfg.graph_path : cfg.builtin;
}

inline void reject_graph(const RunConfig& cfg, const std::string& model)
{
    if (!cfg.graph_path.empty() || !cfg.builtin.empty())
        throw InputError("model " + model + " does not take a graph");
}

inline std::string fmt(double x) { return report::fmt17(x); }

inline json optional_number(const std::optional<double>& x)
{
    return x ? json(*x) : json(nullptr);
}

} // namespace detail

// spectrum

inline ChiralPair build_model_pair(const RunConfig& cfg, std::string& label)
{
    const std::string& model = cfg.model;
    if ((cfg.has_a || cfg.has_b) && model != "hom-example")
        throw InputError("--a and --b apply only to the hom-example model");
    if (model == "grover") {
        const auto g = detail::load_graph(cfg);
        label = "grover:" + detail::graph_label(cfg);
        return walks::grover_positive_support(g);
    }
    if (model == "correlated") {
        if (!cfg.has_p)
            throw InputError("model correlated requires --p");
        const auto g = detail::load_graph(cfg);
        label = "correlated:" + detail::graph_label(cfg);
        return walks::correlated_walk(g, cfg.p);
    }
    if (model == "hom-example") {
        detail::reject_graph(cfg, model);
        if (!cfg.has_p || !cfg.has_a || !cfg.has_b)
            throw InputError("model hom-example requires --p, --a and --b");
        if (!(std::abs(cfg.p) <= 1.0))
            throw InputError("hom-example: |p| must not exceed 1");
        const Complex q(std::sqrt(1.0 - cfg.p * cfg.p), 0.0);
        const Eigen::Vector2cd phi(std::cos(cfg.phi), std::sin(cfg.phi));
        label = "hom-example";
        return walks::example_homogeneous(phi, cfg.p, q, cfg.has_ring ? cfg.ring : 6, cfg.a, cfg.b);
    }
    if (model == "inhom-example") {
        detail::reject_graph(cfg, model);
        label = "inhom-example";
        return walks::example_inhomogeneous(cfg.alpha, Complex(cfg.beta, cfg.beta_im),
                                            cfg.has_ring ? cfg.ring : 6);
    }
    if (model == "mko") {
        detail::reject_graph(cfg, model);
        label = "mko-ring";
        return walks::mko_ring_pair({cfg.gamma, cfg.phi, cfg.theta1, cfg.theta2},
                                    cfg.has_ring ? cfg.ring : 8);
    }
    throw InputError("unknown model '" + model +
                     "' (expected grover, correlated, hom-example, inhom-example or mko)");
}

inline Output cmd_spectrum(const RunConfig& cfg)
{
    std::string label;
    const auto pair = build_model_pair(cfg, label);
    const auto rep = spectral::verify_mapping(pair, {cfg.tol}, label);
    Output out;
    out.doc = report::to_json(rep);
    out.csv = report::to_csv(rep);
    out.passed = rep.passed();
    out.summary = label + ": verdict " + (rep.match ? "match" : "mismatch") + ", bounds " +
                  (rep.bounds.passed() ? "ok" : "violated");
    return out;
}

// zeta

inline Output cmd_zeta(const RunConfig& cfg)
{
    if (cfg.L < 1 || cfg.L > zeta::kWalkLengthCap)
        throw InputError("--L must lie in 1.." + std::to_string(zeta::kWalkLengthCap));
    const auto g = detail::load_graph(cfg);
    const auto z = zeta::zeta_reciprocal(g);
    const auto inv = graph::graph_invariants(g);
    const std::size_t arcs = 2 * static_cast<std::size_t>(g.edge_count());

    json doc;
    json checks = json::object();
    std::vector<std::string> notes;
    bool ok = true;
    doc["graph"] = {{"name", detail::graph_label(cfg)},
                    {"vertices", g.vertex_count()},
                    {"edges", g.edge_count()}};
    doc["zeta_reciprocal"] = z.coefficients;

    std::optional<zeta::ZetaPolynomial> bass;
    if (inv.connected && inv.degree && *inv.degree >= 2) {
        bass = zeta::bass_form(g);
        const double res = zeta::coefficient_residue(z, *bass);
        doc["bass_form"] = bass->coefficients;
        checks["bass_residue"] = {{"value", res}, {"passed", res <= 1e-9}};
        ok = ok && res <= 1e-9;

        const int acc = zeta::roots_accounted(z, zeta::nonbacktracking_support(g));
        checks["roots_in_support"] = {{"accounted", acc},
                                      {"degree", z.degree()},
                                      {"passed", acc == static_cast<int>(z.degree())}};
        ok = ok && acc == static_cast<int>(z.degree());
    } else {
        doc["bass_form"] = nullptr;
        notes.push_back("three-term form skipped: graph is not connected and regular of degree >= 2");
    }

    const double det = linalg::to_complex(zeta::nonbacktracking_matrix(g)).determinant().real();
    const double lead = z.coefficients.back();
    const bool det_ok = std::abs(std::abs(lead) - std::abs(det)) <= 1e-6 * std::max(1.0, std::abs(det));
    checks["leading_vs_det"] = {{"leading", lead}, {"det", det}, {"passed", det_ok}};
    ok = ok && det_ok;

    if (arcs <= zeta::kWalkArcCap) {
        const auto counts = zeta::nb_walk_counts(g, cfg.L).counts;
        const auto s = zeta::log_series_weighted(z.coefficients, cfg.L);
        bool log_ok = true;
        for (int m = 0; m < cfg.L; ++m) {
            const double v = -s[static_cast<std::size_t>(m)];
            log_ok = log_ok && std::abs(v - std::round(v)) <= 1e-6 &&
                     static_cast<std::int64_t>(std::round(v)) == counts[static_cast<std::size_t>(m)];
        }
        doc["walk_counts"] = counts;
        checks["log_series"] = {{"passed", log_ok}};
        ok = ok && log_ok;
    } else {
        doc["walk_counts"] = nullptr;
        notes.push_back("walk counts skipped: " + std::to_string(arcs) + " arcs exceed the cap of " +
                        std::to_string(zeta::kWalkArcCap));
    }

    if (arcs <= zeta::kEulerArcCap) {
        const int L = std::min(cfg.L, zeta::kEulerLengthCap);
        if (L < cfg.L)
            notes.push_back("Euler product truncated at length " + std::to_string(L));
        const auto e = zeta::prime_cycle_product(g, L);
        const auto inv_series = zeta::series_inverse(z.coefficients, L);
        double worst = 0.0;
        for (int i = 0; i <= L; ++i)
            worst = std::max(worst, std::abs(e.series[static_cast<std::size_t>(i)] -
                                             inv_series[static_cast<std::size_t>(i)]));
        doc["euler_product"] = {{"length", L},
                                {"prime_classes", e.prime_classes},
                                {"series", e.series},
                                {"inverse_series", inv_series}};
        checks["euler_product"] = {{"worst", worst}, {"passed", worst <= 1e-9}};
        ok = ok && worst <= 1e-9;
    } else {
        doc["euler_product"] = nullptr;
        notes.push_back("Euler product skipped: " + std::to_string(arcs) + " arcs exceed the cap of " +
                        std::to_string(zeta::kEulerArcCap));
    }

    doc["checks"] = std::move(checks);
    doc["notes"] = notes;
    doc["verdict"] = ok ? "pass" : "fail";

    std::ostringstream csv;
    csv << "power,zeta_reciprocal,bass_form\n";
    for (std::size_t i = 0; i < z.coefficients.size(); ++i) {
        csv << i << ',' << detail::fmt(z.coefficients[i]) << ',';
        if (bass && i < bass->coefficients.size())
            csv << detail::fmt(bass->coefficients[i]);
        csv << '\n';
    }

    Output out;
    out.doc = std::move(doc);
    out.csv = csv.str();
    out.passed = ok;
    out.summary = "zeta " + detail::graph_label(cfg) + ": " + (ok ? "all identities hold" : "identity failed");
    return out;
}

// mko

inline constexpr double kMkoContainmentTolerance = 1e-6;
inline constexpr double kUnimodularTolerance = 1e-10;

inline json interval_json(const walks::Interval& iv)
{
    return json::array({iv.lo, iv.hi});
}

inline json mko_set_json(const walks::MkoSpectrumSet& set)
{
    json reals = json::array();
    for (const auto& iv : set.real_intervals)
        reals.push_back(interval_json(iv));
    return {{"m_gamma", set.m_gamma},
            {"M_gamma", set.M_gamma},
            {"circle_cos_interval", set.circle_cos_interval ? interval_json(*set.circle_cos_interval) : json(nullptr)},
            {"real_intervals", std::move(reals)},
            {"regime", walks::to_string(set.regime)},
            {"gamma0", detail::optional_number(set.gamma0)},
            {"gamma1", detail::optional_number(set.gamma1)}};
}

inline Output cmd_mko(const RunConfig& cfg)
{
    detail::reject_graph(cfg, "mko");
    if (cfg.grid < 64)
        throw InputError("--grid must be at least 64");
    const walks::MkoParams mp{cfg.gamma, cfg.phi, cfg.theta1, cfg.theta2};
    const auto set = walks::mko_closed_form(mp);
    const auto samples = walks::mko_sample(mp, cfg.grid);

    double worst = 0.0;
    double unimodular = 0.0;
    std::ostringstream csv;
    csv << "xi,re1,im1,re2,im2\n";
    for (const auto& s : samples) {
        csv << detail::fmt(s.xi);
        for (const auto& z : s.eigenvalues) {
            worst = std::max(worst, walks::distance_to_set(set, z));
            unimodular = std::max(unimodular, std::abs(std::abs(z) - 1.0));
            csv << ',' << detail::fmt(z.real()) << ',' << detail::fmt(z.imag());
        }
        csv << '\n';
    }
    const bool regime_ok = verify::expected_regime(set.m_gamma, set.M_gamma) == set.regime;
    bool ok = worst <= kMkoContainmentTolerance && regime_ok;

    json doc{{"params", {{"gamma", cfg.gamma}, {"theta1", cfg.theta1}, {"theta2", cfg.theta2}, {"phi", cfg.phi}}},
             {"grid", cfg.grid},
             {"set", mko_set_json(set)},
             {"max_distance", worst},
             {"regime_consistent", regime_ok}};
    if (cfg.gamma == 0.0) {
        doc["all_unimodular"] = unimodular <= kUnimodularTolerance;
        doc["max_unimodular_defect"] = unimodular;
        ok = ok && unimodular <= kUnimodularTolerance;
    }
    doc["verdict"] = ok ? "contained" : "violated";

    Output out;
    out.doc = std::move(doc);
    out.csv = csv.str();
    out.passed = ok;
    out.summary = std::string("mko: regime ") + walks::to_string(set.regime) + ", max distance " +
                  detail::fmt(worst) + (ok ? ", contained" : ", violated");
    return out;
}

// sweep

struct SweepRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
};

inline SweepRange parse_range(const std::string& text)
{
    SweepRange r;
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || *end != '\0' || !std::isfinite(v))
            throw InputError("malformed --range '" + text + "' (expected START:STOP:STEP)");
        parts.push_back(v);
    }
    if (parts.size() != 3)
        throw InputError("malformed --range '" + text + "' (expected START:STOP:STEP)");
    r = {parts[0], parts[1], parts[2]};
    if (!(r.step > 0.0) || r.stop < r.start)
        throw InputError("malformed --range '" + text + "' (need STEP > 0 and STOP >= START)");
    if ((r.stop - r.start) / r.step > 10000.0)
        throw InputError("--range has more than 10000 points");
    return r;
}

inline std::vector<double> range_points(const SweepRange& r)
{
    std::vector<double> pts;
    const int count = static_cast<int>(std::floor((r.stop - r.start) / r.step + 1e-9));
    for (int i = 0; i <= count; ++i)
        pts.push_back(r.start + i * r.step);
    return pts;
}

/// Runs fn(i) for i in [0, n) on a small thread pool.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn)
{
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                fn(i);
        });
    for (auto& t : pool)
        t.join();
}

struct SweepRow {
    json doc;
    std::string csv;
    bool failed = false;
};

inline SweepRow correlated_row(const graph::Graph& g, int k, double p, double tol)
{
    SweepRow row;
    try {
        const walks::CorrelatedParams cp{p, k};
        const auto pair = walks::correlated_walk(g, p);
        const auto ev = linalg::eig_general(pair.U()).eigenvalues;
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (const auto& z : ev) {
            lo = std::min(lo, std::abs(z));
            hi = std::max(hi, std::abs(z));
        }
        const double slack = verify::correlated_containment_slack(ev, p, k);
        const bool contained = slack <= tol;
        const auto& f = pair.flags();
        std::string verdict = "skipped";
        std::string reason;
        if (f.proj_proper && f.s_proper && f.a_neq_b && f.ab_nonzero) {
            const auto rep = spectral::verify_mapping(pair, {tol}, "correlated");
            verdict = rep.passed() ? "match" : "mismatch";
        } else {
            reason = f.first_failure();
        }
        const bool circle = p < 1.0 / k;
        row.failed = !contained || verdict == "mismatch";
        row.doc = {{"p", p},
                   {"a", cp.a()},
                   {"b", cp.b()},
                   {"r", cp.r()},
                   {"circle_radius", circle ? json(std::sqrt(cp.r())) : json(nullptr)},
                   {"min_abs", lo},
                   {"max_abs", hi},
                   {"containment_distance", slack},
                   {"contained", contained},
                   {"verdict", verdict},
                   {"reason", reason}};
        std::ostringstream s;
        s << detail::fmt(p) << ',' << detail::fmt(cp.a()) << ',' << detail::fmt(cp.b()) << ','
          << detail::fmt(cp.r()) << ',' << (circle ? detail::fmt(std::sqrt(cp.r())) : "") << ','
          << detail::fmt(lo) << ',' << detail::fmt(hi) << ',' << (contained ? 1 : 0) << ',' << verdict << '\n';
        row.csv = s.str();
    } catch (const std::exception& e) {
        row.failed = true;
        row.doc = {{"p", p}, {"verdict", "error"}, {"reason", e.what()}};
        row.csv = detail::fmt(p) + ",,,,,,,0,error\n";
    }
    return row;
}

inline SweepRow mko_row(const RunConfig& cfg, double gamma)
{
    SweepRow row;
    try {
        const walks::MkoParams mp{gamma, cfg.phi, cfg.theta1, cfg.theta2};
        const auto set = walks::mko_closed_form(mp);
        double worst = 0.0;
        for (const auto& s : walks::mko_sample(mp, cfg.grid))
            for (const auto& z : s.eigenvalues)
                worst = std::max(worst, walks::distance_to_set(set, z));
        const bool regime_ok = verify::expected_regime(set.m_gamma, set.M_gamma) == set.regime;
        const bool ok = worst <= kMkoContainmentTolerance && regime_ok;
        row.failed = !ok;
        row.doc = {{"gamma", gamma},
                   {"m_gamma", set.m_gamma},
                   {"M_gamma", set.M_gamma},
                   {"regime", walks::to_string(set.regime)},
                   {"circle_radius", 1.0},
                   {"max_distance", worst},
                   {"verdict", ok ? "contained" : "violated"}};
        std::ostringstream s;
        s << detail::fmt(gamma) << ',' << detail::fmt(set.m_gamma) << ',' << detail::fmt(set.M_gamma) << ','
          << walks::to_string(set.regime) << ",1," << detail::fmt(worst) << ',' << (ok ? "contained" : "violated")
          << '\n';
        row.csv = s.str();
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        row.failed = true;
        row.doc = {{"gamma", gamma}, {"verdict", "error"}, {"reason", e.what()}};
        row.csv = detail::fmt(gamma) + ",,,,,,error\n";
    }
    return row;
}

inline Output cmd_sweep(const RunConfig& cfg)
{
    std::vector<double> points;
    std::vector<SweepRow> rows;
    json doc;
    std::string header;

    if (cfg.model == "correlated") {
        const auto g = detail::load_graph(cfg);
        const int k = graph::require_connected_regular(g, 2, "sweep");
        const auto range = parse_range(cfg.has_range ? cfg.range : "0:1:0.1");
        if (range.start < 0.0 || range.stop > 1.0 + 1e-12)
            throw InputError("correlated sweep: p range must lie within [0, 1]");
        points = range_points(range);
        const double critical = 1.0 / k;
        const bool present = std::any_of(points.begin(), points.end(),
                                         [&](double x) { return std::abs(x - critical) <= 1e-12; });
        if (!present && critical >= range.start && critical <= range.stop) {
            points.push_back(critical);
            std::sort(points.begin(), points.end());
        }
        for (auto& x : points)
            x = std::min(x, 1.0);
        rows.resize(points.size());
        parallel_for(points.size(), [&](std::size_t i) { rows[i] = correlated_row(g, k, points[i], cfg.tol); });
        doc["graph"] = detail::graph_label(cfg);
        doc["degree"] = k;
        header = "p,a,b,r,circle_radius,min_abs,max_abs,contained,verdict\n";
    } else if (cfg.model == "mko") {
        detail::reject_graph(cfg, "mko");
        if (cfg.grid < 64)
            throw InputError("--grid must be at least 64");
        const auto range = parse_range(cfg.has_range ? cfg.range : "0:2:0.2");
        if (range.start < 0.0)
            throw InputError("mko sweep: gamma must be non-negative");
        walks::mko_closed_form({range.start, cfg.phi, cfg.theta1, cfg.theta2});
        points = range_points(range);
        rows.resize(points.size());
        parallel_for(points.size(), [&](std::size_t i) { rows[i] = mko_row(cfg, points[i]); });
        doc["params"] = {{"theta1", cfg.theta1}, {"theta2", cfg.theta2}, {"phi", cfg.phi}, {"grid", cfg.grid}};
        header = "gamma,m_gamma,M_gamma,regime,circle_radius,max_distance,verdict\n";
    } else {
        throw InputError("sweep requires --model correlated or --model mko");
    }

    bool ok = true;
    json list = json::array();
    std::string csv = header;
    for (auto& r : rows) {
        ok = ok && !r.failed;
        list.push_back(std::move(r.doc));
        csv += r.csv;
    }
    doc["model"] = cfg.model;
    doc["rows"] = std::move(list);
    doc["verdict"] = ok ? "pass" : "fail";

    Output out;
    out.doc = std::move(doc);
    out.csv = std::move(csv);
    out.passed = ok;
    out.summary = "sweep " + cfg.model + ": " + std::to_string(rows.size()) + " points, " + (ok ? "pass" : "fail");
    return out;
}

// verify

inline Output cmd_verify(const RunConfig& cfg)
{
    const verify::VerifyOptions opt{cfg.seed, cfg.random_pairs, cfg.tol};
    const auto summary = verify::run_verify_suite(opt);
    std::ostringstream csv;
    csv << "name,passed,detail\n";
    for (const auto& c : summary.checks) {
        std::string d = c.detail;
        std::replace(d.begin(), d.end(), '"', '\'');
        csv << c.name << ',' << (c.passed ? 1 : 0) << ",\"" << d << "\"\n";
    }
    Output out;
    out.doc = summary.to_json(opt);
    out.csv = csv.str();
    out.passed = summary.passed();
    if (const auto* f = summary.first_failure())
        out.summary = "verify: first failing invariant " + f->name + " (" + f->detail + ")";
    else
        out.summary = "verify: " + std::to_string(summary.checks.size()) + " invariants hold";
    return out;
}

// driver

inline std::filesystem::path sibling_path(const std::filesystem::path& main, const std::string& ext)
{
    auto p = main;
    p.replace_extension(ext);
    if (p == main)
        p += ext;
    return p;
}

inline void write_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot write " + path.string());
    f << text;
    if (!f)
        throw InputError("failed writing " + path.string());
}

inline int emit(const RunConfig& cfg, const Output& result, std::ostream& out, std::ostream& err)
{
    const std::string json_text = result.doc.dump(2) + "\n";
    if (!cfg.out.empty()) {
        const std::filesystem::path main(cfg.out);
        if (cfg.format == "csv") {
            write_file(main, result.csv);
            write_file(sibling_path(main, ".json"), json_text);
        } else {
            write_file(main, json_text);
            write_file(sibling_path(main, ".csv"), result.csv);
        }
        out << result.summary << '\n';
    } else {
        out << (cfg.format == "csv" ? result.csv : json_text);
    }
    if (!result.passed)
        err << result.summary << '\n';
    return result.passed ? kExitOk : kExitFailed;
}

inline void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--tol", cfg.tol, "matching tolerance (default 1e-8 or $CHIRAL_SPECTRA_TOL)");
    sub->add_option("--out", cfg.out, "write the report here (plus a sibling file in the other format)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

inline void add_graph(CLI::App* sub, RunConfig& cfg)
{
    auto* g = sub->add_option("--graph", cfg.graph_path, "edge-list file");
    auto* b = sub->add_option("--builtin", cfg.builtin, "catalog graph: k4, k5, k33, petersen, cN");
    g->excludes(b);
}

inline void add_mko_params(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--gamma", cfg.gamma, "gain/loss parameter");
    sub->add_option("--theta1", cfg.theta1, "first coin angle");
    sub->add_option("--theta2", cfg.theta2, "second coin angle");
    sub->add_option("--phi", cfg.phi, "phase angle");
}

/// Runs the CLI on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    try {
        cfg.tol = detail::default_tolerance();
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    CLI::App app{"Spectra of chiral-symmetric non-unitary evolutions", "chiral-spectra"};
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand("spectrum", "predict and verify the point spectrum of a model");
    add_graph(spectrum, cfg);
    add_common(spectrum, cfg);
    add_mko_params(spectrum, cfg);
    spectrum->add_option("--model", cfg.model, "grover, correlated, hom-example, inhom-example or mko")->required();
    auto* p_opt = spectrum->add_option("--p", cfg.p, "backtracking probability, or diagonal of the hom-example shift");
    auto* a_opt = spectrum->add_option("--a", cfg.a, "coin eigenvalue a (hom-example)");
    auto* b_opt = spectrum->add_option("--b", cfg.b, "coin eigenvalue b (hom-example)");
    auto* n_opt = spectrum->add_option("--N", cfg.ring, "ring size for ring models");
    spectrum->add_option("--alpha", cfg.alpha, "inhom-example coin alpha");
    spectrum->add_option("--beta", cfg.beta, "inhom-example coin beta (real part)");
    spectrum->add_option("--beta-im", cfg.beta_im, "inhom-example coin beta (imaginary part)");

    auto* zeta_cmd = app.add_subcommand("zeta", "Ihara zeta identities for a graph");
    add_graph(zeta_cmd, cfg);
    add_common(zeta_cmd, cfg);
    zeta_cmd->add_option("--L", cfg.L, "walk length for the combinatorial checks");

    auto* mko = app.add_subcommand("mko", "momentum-space spectrum of the gain/loss walk");
    add_common(mko, cfg);
    add_mko_params(mko, cfg);
    mko->add_option("--grid", cfg.grid, "number of momentum samples (>= 64)");

    auto* sweep = app.add_subcommand("sweep", "spectral summary across a parameter range");
    add_graph(sweep, cfg);
    add_common(sweep, cfg);
    add_mko_params(sweep, cfg);
    sweep->add_option("--model", cfg.model, "correlated or mko")->required();
    sweep->add_option("--grid", cfg.grid, "momentum samples per mko point");
    auto* range_opt = sweep->add_option("--range", cfg.range, "START:STOP:STEP");

    auto* verify_cmd = app.add_subcommand("verify", "run the full invariant suite");
    add_common(verify_cmd, cfg);
    verify_cmd->add_option("--seed", cfg.seed, "seed for random instances");
    verify_cmd->add_option("--random-pairs", cfg.random_pairs, "number of random chiral pairs");

    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    cfg.has_p = p_opt->count() > 0;
    cfg.has_a = a_opt->count() > 0;
    cfg.has_b = b_opt->count() > 0;
    cfg.has_ring = n_opt->count() > 0;
    cfg.has_range = range_opt->count() > 0;

    try {
        if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol))
            throw InputError("--tol must be a positive number");
        Output result;
        if (spectrum->parsed()) {
            cfg.command = "spectrum";
            result = cmd_spectrum(cfg);
        } else if (zeta_cmd->parsed()) {
            cfg.command = "zeta";
            result = cmd_zeta(cfg);
        } else if (mko->parsed()) {
            cfg.command = "mko";
            result = cmd_mko(cfg);
        } else if (sweep->parsed()) {
            cfg.command = "sweep";
            result = cmd_sweep(cfg);
        } else {
            cfg.command = "verify";
            result = cmd_verify(cfg);
        }
        return emit(cfg, result, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitFailed;
    }
}

} // namespace chiral::cli
