// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

// Reference computations for the tests, written without the library's
// numerical routines.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "chiral_spectra/graph.hpp"

namespace oracle {

using Complex = std::complex<double>;

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on the real
/// symmetric embedding [[A, -B], [B, A]] (each eigenvalue appears twice).
inline std::vector<double> jacobi_hermitian_eigenvalues(const Eigen::MatrixXcd& h)
{
    const auto n = h.rows();
    const auto m = 2 * n;
    std::vector<std::vector<double>> a(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(m)));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double re = h(i, j).real();
            const double im = h(i, j).imag();
            a[i][j] = re;
            a[i + n][j + n] = re;
            a[i][j + n] = -im;
            a[i + n][j] = im;
        }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < m; ++p)
            for (Eigen::Index q = p + 1; q < m; ++q)
                off += a[p][q] * a[p][q];
        if (off < 1e-30)
            break;
        for (Eigen::Index p = 0; p < m; ++p) {
            for (Eigen::Index q = p + 1; q < m; ++q) {
                if (std::abs(a[p][q]) < 1e-300)
                    continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (Eigen::Index k = 0; k < m; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < m; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> diag;
    for (Eigen::Index i = 0; i < m; ++i)
        diag.push_back(a[i][i]);
    std::sort(diag.begin(), diag.end());
    std::vector<double> out;
    for (std::size_t i = 0; i < diag.size(); i += 2)
        out.push_back((diag[i] + diag[i + 1]) / 2.0);
    return out;
}

using IntPoly = std::vector<std::int64_t>;

inline IntPoly poly_mul(const IntPoly& x, const IntPoly& y)
{
    IntPoly out(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            out[i + j] += x[i] * y[j];
    return out;
}

inline IntPoly poly_pow(const IntPoly& x, int e)
{
    IntPoly out{1};
    for (int i = 0; i < e; ++i)
        out = poly_mul(out, x);
    return out;
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline int exact_rank(std::vector<std::vector<__int128>> a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    __int128 prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

/// dim ker(M - lambda I) for an integer matrix and integer lambda.
inline int exact_kernel_dimension(const Eigen::MatrixXi& m, int lambda)
{
    std::vector<std::vector<__int128>> a(static_cast<std::size_t>(m.rows()),
                                         std::vector<__int128>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            a[i][j] = m(i, j) - (i == j ? lambda : 0);
    return static_cast<int>(m.cols()) - exact_rank(std::move(a));
}

/// Uniform-ish random connected simple k-regular graph on n vertices by the
/// pairing model with rejection.
inline chiral::graph::Graph random_regular_graph(int n, int k, std::mt19937_64& rng)
{
    for (;;) {
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < k; ++j)
                points.push_back(v);
        std::shuffle(points.begin(), points.end(), rng);
        std::set<std::pair<int, int>> seen;
        std::vector<chiral::graph::Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
            const int u = std::min(points[i], points[i + 1]);
            const int v = std::max(points[i], points[i + 1]);
            simple = u != v && seen.insert({u, v}).second;
            edges.push_back({u, v});
        }
        if (!simple)
            continue;
        chiral::graph::Graph g(n, edges);
        if (chiral::graph::graph_invariants(g).connected)
            return g;
    }
}

/// Bipartite test by 2-colouring.
inline bool is_bipartite_bfs(const chiral::graph::Graph& g)
{
    std::vector<int> colour(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const auto& [x, y] : g.edges()) {
                int w = -1;
                if (x == u)
                    w = y;
                else if (y == u)
                    w = x;
                if (w < 0)
                    continue;
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[u];
                    stack.push_back(w);
                } else if (colour[w] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace oracle
