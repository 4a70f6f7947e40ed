// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "chiral_spectra/graph.hpp"
#include "chiral_spectra/zeta.hpp"
#include "oracles.hpp"

using namespace chiral;

TEST(Graph, ParsesEdgeListWithCommentsAndBlanks)
{
    const auto g = graph::parse_edge_list("# triangle\n0 1\n\n1 2\n  2 0  \n# done\n");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 3);
}

TEST(Graph, RejectsMalformedEdgeLists)
{
    EXPECT_THROW(graph::parse_edge_list("0 0\n"), InputError);
    EXPECT_THROW(graph::parse_edge_list("0 1\n1 0\n"), InputError);
    EXPECT_THROW(graph::parse_edge_list("0 x\n"), InputError);
    EXPECT_THROW(graph::parse_edge_list("0 1 2\n"), InputError);
    EXPECT_THROW(graph::parse_edge_list("# nothing\n"), InputError);
    EXPECT_THROW(graph::parse_edge_list("-1 2\n"), InputError);
    EXPECT_THROW(graph::Graph(2, {{0, 2}}), InputError);
}

TEST(Graph, CatalogHasExpectedSizesAndDegrees)
{
    struct Row {
        const char* name;
        int v, e, k;
        bool bip;
    };
    for (const auto& r : {Row{"c3", 3, 3, 2, false}, Row{"c4", 4, 4, 2, true}, Row{"k4", 4, 6, 3, false},
                          Row{"k5", 5, 10, 4, false}, Row{"k33", 6, 9, 3, true},
                          Row{"petersen", 10, 15, 3, false}, Row{"c7", 7, 7, 2, false}}) {
        const auto g = graph::builtin(r.name);
        const auto inv = graph::graph_invariants(g);
        EXPECT_EQ(g.vertex_count(), r.v) << r.name;
        EXPECT_EQ(g.edge_count(), r.e) << r.name;
        ASSERT_TRUE(inv.degree.has_value()) << r.name;
        EXPECT_EQ(*inv.degree, r.k) << r.name;
        EXPECT_TRUE(inv.connected) << r.name;
        EXPECT_EQ(inv.bipartite, r.bip) << r.name;
        EXPECT_EQ(inv.bipartite, oracle::is_bipartite_bfs(g)) << r.name;
        EXPECT_EQ(inv.betti1, r.e - r.v + 1) << r.name;
    }
    EXPECT_THROW(graph::builtin("k7x"), InputError);
    EXPECT_THROW(graph::builtin("c2"), InputError);
}

TEST(Graph, InvariantsOfDisconnectedAndIrregularGraphs)
{
    const graph::Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    const auto inv = graph::graph_invariants(two_triangles);
    EXPECT_FALSE(inv.connected);
    EXPECT_EQ(inv.components, 2);
    EXPECT_EQ(inv.betti1, 2);
    EXPECT_THROW(graph::require_connected_regular(two_triangles, 2, "test"), InputError);

    const graph::Graph path(3, {{0, 1}, {1, 2}});
    EXPECT_FALSE(graph::graph_invariants(path).degree.has_value());
    EXPECT_THROW(graph::require_connected_regular(path, 1, "test"), InputError);
}

TEST(Graph, ArcReversalIsAFixedPointFreeInvolution)
{
    const auto arcs = graph::arc_structure(graph::builtin("petersen"));
    ASSERT_EQ(arcs.size(), 30u);
    for (std::size_t e = 0; e < arcs.size(); ++e) {
        const auto r = arcs.reversal[e];
        EXPECT_NE(r, e);
        EXPECT_EQ(arcs.reversal[r], e);
        EXPECT_EQ(arcs.arcs[r].origin, arcs.arcs[e].terminus);
        EXPECT_EQ(arcs.arcs[r].terminus, arcs.arcs[e].origin);
    }
}

TEST(Graph, IncidenceIdentities)
{
    for (const auto& name : graph::catalog_names()) {
        const auto g = graph::builtin(name);
        const auto arcs = graph::arc_structure(g);
        const auto k = graph::incidence_matrices(g);
        const linalg::IntMatrix j = graph::reversal_matrix(arcs);
        EXPECT_EQ(k.out, k.in * j) << name;
        EXPECT_EQ(linalg::IntMatrix(k.in * k.out.transpose()), graph::adjacency(g)) << name;
        // K_out^T K_in has (e, f) = [t(f) = o(e)]; removing J leaves the non-backtracking matrix.
        const linalg::IntMatrix bprime = k.out.transpose() * k.in;
        EXPECT_EQ(linalg::IntMatrix(bprime - j), zeta::nonbacktracking_matrix(g)) << name;
        EXPECT_EQ(linalg::IntMatrix(j * j), linalg::IntMatrix::Identity(j.rows(), j.cols())) << name;
    }
}
