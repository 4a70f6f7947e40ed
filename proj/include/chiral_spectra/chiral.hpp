// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

// The chiral pair (S, d, a, b): a self-adjoint unitary involution S on H, a
// coisometry d : H -> K (d d^* = I_K) and two real coin eigenvalues. From it
// we derive
//
//     C = a d^*d + b (I - d^*d),   U = S C,   T = d S d^*.
//
// U is generally non-normal; T is self-adjoint with ||T|| <= 1.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "chiral_spectra/error.hpp"
#include "chiral_spectra/linalg.hpp"

namespace chiral {

using linalg::Complex;
using linalg::ComplexMatrix;

inline constexpr double kStructureTolerance = 1e-12;
inline constexpr double kProperProjectionThreshold = 1e-10;

/// Which of the standing spectral-mapping assumptions hold.
struct AssumptionFlags {
    bool proj_proper = false;  ///< d^*d != I
    bool s_proper = false;     ///< S != +-I
    bool a_neq_pm_b = false;   ///< a != b and a != -b
    bool ab_nonzero = false;

    // Finer split of a_neq_pm_b. a == -b still admits a spectral prediction
    // (birth eigenvalues coalesce); a == b does not.
    bool a_neq_b = false;
    bool a_neq_minus_b = false;

    bool all() const noexcept { return proj_proper && s_proper && a_neq_pm_b && ab_nonzero; }

    /// Name of the first failing assumption, or empty when all hold.
    std::string first_failure() const
    {
        if (!proj_proper)
            return "d^*d = I (coin has a single eigenvalue)";
        if (!s_proper)
            return "S = +-I";
        if (!a_neq_b)
            return "a = b";
        if (!a_neq_minus_b)
            return "a = -b";
        if (!ab_nonzero)
            return "ab = 0";
        return {};
    }
};

struct MultiplicityData {
    int m_plus = 0;   ///< dim ker(T - 1)
    int m_minus = 0;  ///< dim ker(T + 1)
    int M_plus = 0;   ///< dim [ker d  ∩ ker(S + 1)]
    int M_minus = 0;  ///< dim [ker d  ∩ ker(S - 1)]
    int dim_H = 0;
    int dim_K = 0;

    /// M+ + M- = dim H - 2 dim K + m+ + m-.
    bool accounting_holds() const noexcept
    {
        return M_plus + M_minus == dim_H - 2 * dim_K + m_plus + m_minus;
    }
};

struct NormalityDefect {
    double lhs_norm = 0.0;  ///< ||U U^* - U^* U||
    double rhs_norm = 0.0;  ///< ||(a^2 - b^2) [S, d^*d] S||
    double residual = 0.0;  ///< norm of their difference
};

class ChiralPair {
public:
    /// Validates d d^* = I, S = S^*, S^2 = I and dimension compatibility;
    /// throws InputError otherwise. Assumption violations are recorded in
    /// flags() and do not prevent construction.
    static ChiralPair build(ComplexMatrix s, ComplexMatrix d, double a, double b)
    {
        linalg::require_finite(s, "chiral pair S");
        linalg::require_finite(d, "chiral pair d");
        linalg::require_square(s, "chiral pair S");
        if (!std::isfinite(a) || !std::isfinite(b))
            throw InputError("chiral pair: a and b must be finite");
        const auto n = s.rows();
        if (d.cols() != n)
            throw InputError("chiral pair: d has " + std::to_string(d.cols()) +
                             " columns but S is " + std::to_string(n) + "x" + std::to_string(n));
        if (d.rows() == 0 || d.rows() > n)
            throw InputError("chiral pair: d must map onto a space of dimension 1.." +
                             std::to_string(n));

        const auto m = d.rows();
        if (linalg::max_abs(d * d.adjoint() - linalg::identity(m)) > kStructureTolerance)
            throw InputError("chiral pair: d is not a coisometry (d d^* != I)");
        if (linalg::max_abs(s - s.adjoint()) > kStructureTolerance)
            throw InputError("chiral pair: S is not self-adjoint");
        if (linalg::max_abs(s * s - linalg::identity(n)) > kStructureTolerance)
            throw InputError("chiral pair: S is not an involution (S^2 != I)");

        ChiralPair p;
        p.s_ = std::move(s);
        p.d_ = std::move(d);
        p.a_ = a;
        p.b_ = b;
        p.projection_ = p.d_.adjoint() * p.d_;
        p.c_ = a * p.projection_ + b * (linalg::identity(n) - p.projection_);
        p.u_ = p.s_ * p.c_;
        ComplexMatrix t = p.d_ * p.s_ * p.d_.adjoint();
        if (linalg::max_abs(t - t.adjoint()) > kStructureTolerance)
            throw NumericalError("chiral pair: discriminant lost self-adjointness");
        p.t_ = (t + t.adjoint()) / 2.0;
        if (linalg::operator_norm(p.t_) > 1.0 + 1e-10)
            throw NumericalError("chiral pair: ||T|| exceeds 1");

        const double ab_scale = std::max({std::abs(a), std::abs(b), 1.0});
        const auto residual = linalg::singular_values(linalg::identity(n) - p.projection_);
        p.flags_.proj_proper = !residual.empty() && residual.front() > kProperProjectionThreshold;
        p.flags_.s_proper = linalg::max_abs(p.s_ - linalg::identity(n)) > kProperProjectionThreshold &&
                            linalg::max_abs(p.s_ + linalg::identity(n)) > kProperProjectionThreshold;
        p.flags_.a_neq_b = std::abs(a - b) > kStructureTolerance * ab_scale;
        p.flags_.a_neq_minus_b = std::abs(a + b) > kStructureTolerance * ab_scale;
        p.flags_.a_neq_pm_b = p.flags_.a_neq_b && p.flags_.a_neq_minus_b;
        p.flags_.ab_nonzero = std::abs(a) > kStructureTolerance * ab_scale &&
                              std::abs(b) > kStructureTolerance * ab_scale;
        return p;
    }

    const ComplexMatrix& S() const noexcept { return s_; }
    const ComplexMatrix& d() const noexcept { return d_; }
    const ComplexMatrix& C() const noexcept { return c_; }
    const ComplexMatrix& U() const noexcept { return u_; }
    const ComplexMatrix& T() const noexcept { return t_; }
    /// d^*d, the orthogonal projection onto the a-eigenspace of C.
    const ComplexMatrix& projection() const noexcept { return projection_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    const AssumptionFlags& flags() const noexcept { return flags_; }

    int dim_H() const noexcept { return static_cast<int>(s_.rows()); }
    int dim_K() const noexcept { return static_cast<int>(d_.rows()); }

private:
    ChiralPair() = default;

    ComplexMatrix s_, d_, c_, u_, t_, projection_;
    double a_ = 0.0;
    double b_ = 0.0;
    AssumptionFlags flags_;
};

inline ChiralPair build_chiral_pair(ComplexMatrix s, ComplexMatrix d, double a, double b)
{
    return ChiralPair::build(std::move(s), std::move(d), a, b);
}

inline const ComplexMatrix& discriminant(const ChiralPair& p)
{
    return p.T();
}

inline MultiplicityData multiplicity_data(const ChiralPair& p,
                                          double tol = linalg::kDefaultRankTolerance)
{
    const auto n = p.S().rows();
    const auto m = p.d().rows();
    MultiplicityData out;
    out.dim_H = static_cast<int>(n);
    out.dim_K = static_cast<int>(m);
    out.m_plus = static_cast<int>(linalg::kernel_dimension(p.T() - linalg::identity(m), tol));
    out.m_minus = static_cast<int>(linalg::kernel_dimension(p.T() + linalg::identity(m), tol));

    // ker d ∩ ker(S ± 1) is the kernel of the stacked (m + n) x n matrix.
    ComplexMatrix stacked(m + n, n);
    stacked.topRows(m) = p.d();
    stacked.bottomRows(n) = p.S() + linalg::identity(n);
    out.M_plus = static_cast<int>(linalg::kernel_dimension(stacked, tol));
    stacked.bottomRows(n) = p.S() - linalg::identity(n);
    out.M_minus = static_cast<int>(linalg::kernel_dimension(stacked, tol));
    return out;
}

inline NormalityDefect normality_defect(const ChiralPair& p)
{
    const ComplexMatrix& u = p.U();
    const ComplexMatrix commutator = u * u.adjoint() - u.adjoint() * u;
    const ComplexMatrix& proj = p.projection();
    const ComplexMatrix predicted =
        (p.a() * p.a() - p.b() * p.b()) * (p.S() * proj - proj * p.S()) * p.S();
    return {linalg::operator_norm(commutator), linalg::operator_norm(predicted),
            linalg::operator_norm(commutator - predicted)};
}

/// ||S U S - U^*||; zero up to rounding for every pair.
inline double chiral_symmetry_residual(const ChiralPair& p)
{
    return linalg::operator_norm(p.S() * p.U() * p.S() - p.U().adjoint());
}

/// ||U|| next to max(|a|, |b|) (or |a| when d^*d = I); S unitary makes them equal.
struct NormCheck {
    double norm_u = 0.0;
    double expected = 0.0;
};

inline NormCheck norm_check(const ChiralPair& p)
{
    const double expected = p.flags().proj_proper ? std::max(std::abs(p.a()), std::abs(p.b()))
                                                  : std::abs(p.a());
    return {linalg::operator_norm(p.U()), expected};
}

} // namespace chiral
