// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

// Dense complex linear algebra used by the rest of the library.
//
// Eigen provides the eigensolvers and the SVD. The characteristic polynomial
// is computed separately by the Faddeev-LeVerrier recursion so that it stays
// an independent check on the general eigensolver.

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "chiral_spectra/error.hpp"

namespace chiral::linalg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using IntMatrix = Eigen::MatrixXi;

inline constexpr std::size_t kDefaultDimensionCap = 512;
inline constexpr double kDefaultRankTolerance = 1e-10;
inline constexpr std::size_t kCharPolyCap = 64;

struct EigenResult {
    /// All n eigenvalues, repeated according to algebraic multiplicity.
    std::vector<Complex> eigenvalues;
    /// Orthonormal eigenvectors (columns), only filled by eig_hermitian.
    std::optional<ComplexMatrix> hermitian_basis;

    std::vector<double> real_parts() const
    {
        std::vector<double> out;
        out.reserve(eigenvalues.size());
        for (const auto& z : eigenvalues)
            out.push_back(z.real());
        return out;
    }
};

inline void require_finite(const ComplexMatrix& m, std::string_view what)
{
    if (!m.allFinite())
        throw InputError(std::string(what) + ": matrix has non-finite entries");
}

inline void require_square(const ComplexMatrix& m, std::string_view what)
{
    if (m.rows() != m.cols())
        throw InputError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
}

inline ComplexMatrix to_complex(const IntMatrix& m)
{
    return m.cast<double>().cast<Complex>();
}

inline ComplexMatrix identity(Eigen::Index n)
{
    return ComplexMatrix::Identity(n, n);
}

/// Largest entry modulus; the norm used for "within tol" structural checks.
inline double max_abs(const ComplexMatrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Singular values in descending order.
inline std::vector<double> singular_values(const ComplexMatrix& m)
{
    require_finite(m, "singular_values");
    if (m.size() == 0)
        return {};
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

/// Spectral (operator 2-) norm.
inline double operator_norm(const ComplexMatrix& m)
{
    const auto s = singular_values(m);
    return s.empty() ? 0.0 : s.front();
}

inline double smallest_singular_value(const ComplexMatrix& m)
{
    const auto s = singular_values(m);
    return s.empty() ? 0.0 : s.back();
}

inline std::size_t numerical_rank(const ComplexMatrix& m, double tol = kDefaultRankTolerance)
{
    const auto s = singular_values(m);
    if (s.empty())
        return 0;
    const double threshold = tol * std::max(s.front(), 1.0);
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [threshold](double v) { return v >= threshold; }));
}

/// cols - numerical rank, with singular values below tol * max(sigma_max, 1)
/// treated as zero.
inline std::size_t kernel_dimension(const ComplexMatrix& m, double tol = kDefaultRankTolerance)
{
    return static_cast<std::size_t>(m.cols()) - numerical_rank(m, tol);
}

/// Eigenvalues of a general square matrix via Hessenberg reduction and
/// shifted complex QR (Eigen::ComplexEigenSolver).
inline EigenResult eig_general(const ComplexMatrix& m, std::size_t cap = kDefaultDimensionCap)
{
    require_square(m, "eig_general");
    require_finite(m, "eig_general");
    if (static_cast<std::size_t>(m.rows()) > cap)
        throw InputError("eig_general: dimension " + std::to_string(m.rows()) + " exceeds cap " +
                         std::to_string(cap));
    EigenResult out;
    if (m.rows() == 0)
        return out;
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eig_general: QR iteration did not converge (n=" +
                             std::to_string(m.rows()) + ")");
    const auto& ev = solver.eigenvalues();
    out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    return out;
}

/// Eigen-decomposition of a Hermitian matrix: ascending real eigenvalues and
/// an orthonormal eigenvector basis.
inline EigenResult eig_hermitian(const ComplexMatrix& m)
{
    require_square(m, "eig_hermitian");
    require_finite(m, "eig_hermitian");
    const double scale = std::max(m.norm(), 1.0);
    if ((m - m.adjoint()).norm() > 1e-10 * scale)
        throw InputError("eig_hermitian: matrix is not Hermitian");
    EigenResult out;
    if (m.rows() == 0) {
        out.hermitian_basis = ComplexMatrix(0, 0);
        return out;
    }
    const ComplexMatrix sym = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eig_hermitian: tridiagonal QR did not converge");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
        out.eigenvalues.emplace_back(solver.eigenvalues()(i), 0.0);
    out.hermitian_basis = solver.eigenvectors();
    return out;
}

/// Coefficients of det(I - u m) in ascending powers of u, by the
/// Faddeev-LeVerrier recursion carried out in extended precision.
inline std::vector<Complex> char_poly(const ComplexMatrix& m)
{
    require_square(m, "char_poly");
    require_finite(m, "char_poly");
    const auto n = static_cast<std::size_t>(m.rows());
    if (n > kCharPolyCap)
        throw InputError("char_poly: dimension " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kCharPolyCap));

    using Wide = std::complex<long double>;
    using WideMatrix = Eigen::Matrix<Wide, Eigen::Dynamic, Eigen::Dynamic>;
    const WideMatrix a = m.cast<Wide>();
    WideMatrix acc = WideMatrix::Identity(m.rows(), m.rows());
    std::vector<Complex> coeffs{Complex(1.0, 0.0)};
    coeffs.reserve(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        WideMatrix prod = a * acc;
        const Wide e = -prod.trace() / static_cast<long double>(k);
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw NumericalError("char_poly: overflow at step " + std::to_string(k));
        coeffs.emplace_back(static_cast<double>(e.real()), static_cast<double>(e.imag()));
        prod.diagonal().array() += e;
        acc = std::move(prod);
    }
    return coeffs;
}

/// Exact det(I - u m) for an integer matrix. Intermediate products are held
/// in 128-bit integers; overflow is reported rather than wrapped.
inline std::vector<std::int64_t> char_poly_exact(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw InputError("char_poly_exact: matrix is not square");
    const auto n = static_cast<std::size_t>(m.rows());
    if (n > kCharPolyCap)
        throw InputError("char_poly_exact: dimension " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kCharPolyCap));

    using Wide = __int128;
    auto overflow = [](std::size_t step) {
        return NumericalError("char_poly_exact: 128-bit overflow at step " + std::to_string(step));
    };
    std::vector<Wide> acc(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        acc[i * n + i] = 1;
    std::vector<Wide> prod(n * n);
    std::vector<std::int64_t> coeffs{1};
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Wide sum = 0;
                for (std::size_t l = 0; l < n; ++l) {
                    const Wide lhs = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l));
                    if (lhs == 0)
                        continue;
                    Wide term;
                    if (__builtin_mul_overflow(lhs, acc[l * n + j], &term) ||
                        __builtin_add_overflow(sum, term, &sum))
                        throw overflow(k);
                }
                prod[i * n + j] = sum;
            }
        }
        Wide trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (__builtin_add_overflow(trace, prod[i * n + i], &trace))
                throw overflow(k);
        if (trace % static_cast<Wide>(k) != 0)
            throw NumericalError("char_poly_exact: non-integral coefficient at step " +
                                 std::to_string(k));
        const Wide e = -trace / static_cast<Wide>(k);
        if (e > INT64_MAX || e < INT64_MIN)
            throw overflow(k);
        coeffs.push_back(static_cast<std::int64_t>(e));
        for (std::size_t i = 0; i < n; ++i)
            prod[i * n + i] += e;
        acc.swap(prod);
    }
    return coeffs;
}

inline bool is_hermitian(const ComplexMatrix& m, double tol)
{
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

} // namespace chiral::linalg
