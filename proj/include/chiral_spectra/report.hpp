// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

// JSON and CSV serialization of spectrum reports.

#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chiral_spectra/spectral.hpp"

namespace chiral::report {

using nlohmann::json;

/// Round-trippable 17-significant-digit formatting.
inline std::string fmt17(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline json to_json(const spectral::BoundCheck& c)
{
    return {{"checked", c.checked},
            {"violations", c.violations},
            {"worst_slack", c.checked > 0 ? json(c.worst_slack) : json(nullptr)},
            {"passed", c.passed()}};
}

inline json to_json(const spectral::SpectrumReport& r)
{
    json atoms = json::array();
    for (const auto& at : r.predicted)
        atoms.push_back({{"re", at.value.real()},
                         {"im", at.value.imag()},
                         {"mult", at.multiplicity},
                         {"origin", spectral::to_string(at.origin)},
                         {"t_source", at.t_source},
                         {"degenerate", at.degenerate}});
    json direct = json::array();
    for (const auto& c : r.direct.clusters)
        direct.push_back({{"re", c.value.real()}, {"im", c.value.imag()}, {"mult_geometric", c.geometric}});
    return {{"model", r.model},
            {"n", r.n},
            {"a", r.a},
            {"b", r.b},
            {"atoms", std::move(atoms)},
            {"direct", std::move(direct)},
            {"verdict", r.match ? "match" : "mismatch"},
            {"bounds",
             {{"annulus", to_json(r.bounds.annulus)},
              {"locus", to_json(r.bounds.locus)},
              {"resolvent", to_json(r.bounds.resolvent)}}},
            {"max_pair_distance", r.max_pair_distance},
            {"notes", r.notes}};
}

/// One row per direct cluster; origin and t_source come from the paired
/// predicted atom and are empty for unpaired clusters.
inline std::string to_csv(const spectral::SpectrumReport& r)
{
    std::vector<const spectral::SpectralAtom*> atom_of(r.direct.clusters.size(), nullptr);
    for (const auto& pr : r.pairings)
        if (pr.cluster < atom_of.size() && pr.atom < r.predicted.size())
            atom_of[pr.cluster] = &r.predicted[pr.atom];

    std::ostringstream out;
    out << "re,im,mult_geometric,origin,t_source\n";
    for (std::size_t i = 0; i < r.direct.clusters.size(); ++i) {
        const auto& c = r.direct.clusters[i];
        out << fmt17(c.value.real()) << ',' << fmt17(c.value.imag()) << ',' << c.geometric << ',';
        if (atom_of[i])
            out << spectral::to_string(atom_of[i]->origin) << ',' << fmt17(atom_of[i]->t_source);
        else
            out << ',';
        out << '\n';
    }
    return out.str();
}

} // namespace chiral::report
