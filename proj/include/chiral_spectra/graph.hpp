// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

// Finite simple graphs, their symmetric arcs, incidence matrices and the
// invariants (degree, connectivity, bipartiteness, first Betti number)
// consumed by the walk builders.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chiral_spectra/error.hpp"
#include "chiral_spectra/linalg.hpp"

namespace chiral::graph {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..vertex_count-1.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on self-loops, repeated edges or out-of-range indices.
    Graph(int vertex_count, std::vector<Edge> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges))
    {
        if (vertex_count_ < 0)
            throw InputError("graph: negative vertex count");
        std::set<Edge> seen;
        for (const auto& [u, v] : edges_) {
            if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
                throw InputError("graph: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                 "} references a vertex outside 0.." +
                                 std::to_string(vertex_count_ - 1));
            if (u == v)
                throw InputError("graph: self-loop at vertex " + std::to_string(u));
            if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
                throw InputError("graph: duplicate edge {" + std::to_string(u) + "," +
                                 std::to_string(v) + "}");
        }
    }

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::vector<int> degrees() const
    {
        std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
        for (const auto& [u, v] : edges_) {
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        }
        return deg;
    }

    std::vector<std::vector<Vertex>> neighbours() const
    {
        std::vector<std::vector<Vertex>> nb(static_cast<std::size_t>(vertex_count_));
        for (const auto& [u, v] : edges_) {
            nb[static_cast<std::size_t>(u)].push_back(v);
            nb[static_cast<std::size_t>(v)].push_back(u);
        }
        return nb;
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

struct Arc {
    Vertex origin;
    Vertex terminus;
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Symmetric arcs of a graph. Edge i = {u,v} in input order yields arc 2i =
/// (u,v) and arc 2i+1 = (v,u); reversal pairs them.
struct ArcSet {
    std::vector<Arc> arcs;
    std::vector<std::size_t> reversal;

    std::size_t size() const noexcept { return arcs.size(); }
};

inline ArcSet arc_structure(const Graph& g)
{
    ArcSet out;
    out.arcs.reserve(2 * g.edges().size());
    out.reversal.reserve(2 * g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const auto [u, v] = g.edges()[i];
        out.arcs.push_back({u, v});
        out.arcs.push_back({v, u});
        out.reversal.push_back(2 * i + 1);
        out.reversal.push_back(2 * i);
    }
    return out;
}

struct Incidence {
    linalg::IntMatrix in;   ///< (K_in psi)(u) = sum over arcs ending at u
    linalg::IntMatrix out;  ///< (K_out psi)(u) = sum over arcs starting at u
};

inline Incidence incidence_matrices(const Graph& g)
{
    const ArcSet arcs = arc_structure(g);
    const auto nv = static_cast<Eigen::Index>(g.vertex_count());
    const auto na = static_cast<Eigen::Index>(arcs.size());
    Incidence k{linalg::IntMatrix::Zero(nv, na), linalg::IntMatrix::Zero(nv, na)};
    for (Eigen::Index e = 0; e < na; ++e) {
        const Arc& arc = arcs.arcs[static_cast<std::size_t>(e)];
        k.in(arc.terminus, e) = 1;
        k.out(arc.origin, e) = 1;
    }
    return k;
}

/// Arc-reversal permutation matrix J, (J psi)(e) = psi(reverse(e)).
inline linalg::IntMatrix reversal_matrix(const ArcSet& arcs)
{
    const auto na = static_cast<Eigen::Index>(arcs.size());
    linalg::IntMatrix j = linalg::IntMatrix::Zero(na, na);
    for (Eigen::Index e = 0; e < na; ++e)
        j(e, static_cast<Eigen::Index>(arcs.reversal[static_cast<std::size_t>(e)])) = 1;
    return j;
}

inline linalg::IntMatrix adjacency(const Graph& g)
{
    const auto nv = static_cast<Eigen::Index>(g.vertex_count());
    linalg::IntMatrix m = linalg::IntMatrix::Zero(nv, nv);
    for (const auto& [u, v] : g.edges()) {
        m(u, v) = 1;
        m(v, u) = 1;
    }
    return m;
}

struct GraphInvariants {
    std::optional<int> degree;  ///< set iff every vertex has the same degree
    bool connected = false;
    bool bipartite = false;
    int components = 0;
    int betti1 = 0;             ///< |E| - |V| + components
    std::optional<std::vector<int>> bipartition;
};

inline GraphInvariants graph_invariants(const Graph& g)
{
    GraphInvariants inv;
    const auto deg = g.degrees();
    if (!deg.empty() && std::all_of(deg.begin(), deg.end(), [&](int d) { return d == deg.front(); }))
        inv.degree = deg.front();

    const auto nb = g.neighbours();
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> colour(n, -1);
    bool bipartite = true;
    std::vector<Vertex> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (colour[start] >= 0)
            continue;
        ++inv.components;
        colour[start] = 0;
        stack.push_back(static_cast<Vertex>(start));
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : nb[static_cast<std::size_t>(u)]) {
                auto& cv = colour[static_cast<std::size_t>(v)];
                const int cu = colour[static_cast<std::size_t>(u)];
                if (cv < 0) {
                    cv = 1 - cu;
                    stack.push_back(v);
                } else if (cv == cu) {
                    bipartite = false;
                }
            }
        }
    }
    inv.connected = inv.components == 1;
    inv.bipartite = bipartite;
    inv.betti1 = g.edge_count() - g.vertex_count() + inv.components;
    if (bipartite)
        inv.bipartition = std::move(colour);
    return inv;
}

/// Degree of a connected regular graph with degree >= min_degree; throws
/// InputError naming the first violated requirement.
inline int require_connected_regular(const Graph& g, int min_degree, std::string_view who)
{
    const auto inv = graph_invariants(g);
    if (!inv.degree)
        throw InputError(std::string(who) + ": graph is not regular");
    if (!inv.connected)
        throw InputError(std::string(who) + ": graph is not connected");
    if (*inv.degree < min_degree)
        throw InputError(std::string(who) + ": degree " + std::to_string(*inv.degree) +
                         " is below the required " + std::to_string(min_degree));
    return *inv.degree;
}

/// Parses whitespace-separated 0-based vertex pairs, one edge per line.
/// Blank lines and lines starting with '#' are skipped.
inline Graph parse_edge_list(std::istream& in)
{
    std::vector<Edge> edges;
    int max_index = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        std::string tok[3];
        fields >> tok[0] >> tok[1] >> tok[2];
        if (tok[0].empty() || tok[1].empty() || !tok[2].empty())
            throw InputError("edge list line " + std::to_string(line_no) +
                             ": expected exactly two vertex indices");
        Vertex uv[2];
        for (int i = 0; i < 2; ++i) {
            const char* begin = tok[i].data();
            const char* end = begin + tok[i].size();
            auto [ptr, ec] = std::from_chars(begin, end, uv[i]);
            if (ec != std::errc{} || ptr != end || uv[i] < 0)
                throw InputError("edge list line " + std::to_string(line_no) +
                                 ": '" + tok[i] + "' is not a non-negative integer");
        }
        if (uv[0] == uv[1])
            throw InputError("edge list line " + std::to_string(line_no) + ": self-loop at vertex " +
                             std::to_string(uv[0]));
        max_index = std::max({max_index, uv[0], uv[1]});
        edges.emplace_back(uv[0], uv[1]);
    }
    if (edges.empty())
        throw InputError("edge list: no edges");
    return Graph(max_index + 1, std::move(edges));
}

inline Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

// Built-in catalog.

inline Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph complete_bipartite(int left, int right)
{
    std::vector<Edge> edges;
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v)
            edges.emplace_back(u, left + v);
    return Graph(left + right, std::move(edges));
}

inline Graph cycle_graph(int n)
{
    if (n < 3)
        throw InputError("cycle graph needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        edges.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(edges));
}

inline Graph petersen_graph()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, std::move(edges));
}

/// k4, k5, k33, petersen, k2 (single edge) and cN for N >= 3.
inline Graph builtin(std::string_view name)
{
    if (name == "k4")
        return complete_graph(4);
    if (name == "k5")
        return complete_graph(5);
    if (name == "k33")
        return complete_bipartite(3, 3);
    if (name == "petersen")
        return petersen_graph();
    if (name == "k2")
        return complete_graph(2);
    if (name.size() >= 2 && name.front() == 'c') {
        int n = 0;
        const auto digits = name.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc{} && ptr == digits.data() + digits.size())
            return cycle_graph(n);
    }
    throw InputError("unknown built-in graph '" + std::string(name) + "'");
}

inline const std::vector<std::string>& catalog_names()
{
    static const std::vector<std::string> names{"c3", "c4", "k4", "k5", "k33", "petersen"};
    return names;
}

} // namespace chiral::graph
