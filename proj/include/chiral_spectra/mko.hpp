// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

// The MKO gain/loss walk on Z:
//
//     U_gamma = S~ G Phi C~(theta2) S~ G^-1 Phi C~(theta1)
//
// G = diag(e^g, e^-g), Phi = diag(e^{i phi}, e^{-i phi}),
// C~(theta) = [[cos, i sin], [i sin, cos]] and (S~ Psi)(x) = (Psi1(x+1), Psi2(x-1)).
// With Psi^(xi) = sum_x e^{-i xi x} Psi(x) the shift becomes
// diag(e^{i xi}, e^{-i xi}), so U_gamma acts as a 2x2 matrix per momentum.
// It is unitarily equivalent to S_mko C_mko with
//
//     S_mko = S~ C~(theta1) S~ sigma2,   C_mko = sigma2 G Phi C~(theta2) G^-1 Phi.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chiral_spectra/chiral.hpp"
#include "chiral_spectra/error.hpp"
#include "chiral_spectra/linalg.hpp"

namespace chiral::walks {

using Matrix2 = Eigen::Matrix2cd;

struct MkoParams {
    double gamma = 0.0;
    double phi = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;

    double p() const { return -std::sin(theta1); }
    Complex q() const { return Complex(0.0, -std::cos(theta1)); }
    double a() const { return std::sin(theta2); }
    Complex b() const { return Complex(0.0, -1.0) * std::exp(Complex(0.0, -2.0 * phi)) * std::cos(theta2); }

    double m_gamma() const { return a() * p() * std::cosh(2.0 * gamma) - std::abs(q() * b()); }
    double M_gamma() const { return a() * p() * std::cosh(2.0 * gamma) + std::abs(q() * b()); }

    /// Gamma_i = -(1 + (-1)^{i+1} |qb|) / (ap), i = 0, 1.
    double Gamma(int i) const
    {
        const double sign = (i == 0) ? -1.0 : 1.0;
        return -(1.0 + sign * std::abs(q() * b())) / (a() * p());
    }

    /// gamma_i = log(Gamma_i + sqrt(Gamma_i^2 - 1)) / 2 when Gamma_i >= 1.
    std::optional<double> gamma_threshold(int i) const
    {
        const double g = Gamma(i);
        if (!(g >= 1.0))
            return std::nullopt;
        return 0.5 * std::log(g + std::sqrt(g * g - 1.0));
    }
};

namespace mko_detail {

inline Matrix2 gain(double gamma)
{
    Matrix2 m = Matrix2::Zero();
    m(0, 0) = std::exp(gamma);
    m(1, 1) = std::exp(-gamma);
    return m;
}

inline Matrix2 phase(double phi)
{
    Matrix2 m = Matrix2::Zero();
    m(0, 0) = std::exp(Complex(0.0, phi));
    m(1, 1) = std::exp(Complex(0.0, -phi));
    return m;
}

inline Matrix2 coin(double theta)
{
    Matrix2 m;
    m << std::cos(theta), Complex(0.0, std::sin(theta)), Complex(0.0, std::sin(theta)), std::cos(theta);
    return m;
}

inline Matrix2 sigma2()
{
    Matrix2 m;
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

inline Matrix2 shift_symbol(double xi)
{
    Matrix2 m = Matrix2::Zero();
    m(0, 0) = std::exp(Complex(0.0, xi));
    m(1, 1) = std::exp(Complex(0.0, -xi));
    return m;
}

inline Matrix2 c_mko(const MkoParams& mp)
{
    return sigma2() * gain(mp.gamma) * phase(mp.phi) * coin(mp.theta2) * gain(-mp.gamma) * phase(mp.phi);
}

} // namespace mko_detail

/// U_gamma at momentum xi.
inline Matrix2 mko_momentum_matrix(const MkoParams& mp, double xi)
{
    using namespace mko_detail;
    const Matrix2 s = shift_symbol(xi);
    return s * gain(mp.gamma) * phase(mp.phi) * coin(mp.theta2) * s * gain(-mp.gamma) * phase(mp.phi) *
           coin(mp.theta1);
}

struct MkoFactors {
    Matrix2 s_mko;  ///< S~ C~(theta1) S~ sigma2 at momentum xi
    Matrix2 c_mko;  ///< sigma2 G Phi C~(theta2) G^-1 Phi
};

inline MkoFactors mko_equivalence_factors(const MkoParams& mp, double xi)
{
    using namespace mko_detail;
    const Matrix2 s = shift_symbol(xi);
    return {s * coin(mp.theta1) * s * sigma2(), c_mko(mp)};
}

inline std::array<Complex, 2> eigenvalues2(const Matrix2& m)
{
    Eigen::ComplexEigenSolver<Matrix2> solver(m, false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("2x2 eigensolve failed");
    return {solver.eigenvalues()(0), solver.eigenvalues()(1)};
}

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

enum class MkoRegime { circle_only, mixed, real_only };

inline const char* to_string(MkoRegime r)
{
    switch (r) {
    case MkoRegime::circle_only: return "circle_only";
    case MkoRegime::mixed: return "mixed";
    case MkoRegime::real_only: return "real_only";
    }
    return "unknown";
}

/// sigma(U_gamma) = { e^{i xi} : cos xi in circle_cos_interval } ∪ real_intervals.
struct MkoSpectrumSet {
    double m_gamma = 0.0;
    double M_gamma = 0.0;
    std::optional<Interval> circle_cos_interval;
    std::vector<Interval> real_intervals;
    MkoRegime regime = MkoRegime::circle_only;
    std::optional<double> gamma0;
    std::optional<double> gamma1;
};

inline double f_plus(double x) { return x + std::sqrt(x * x - 1.0); }
inline double f_minus(double x) { return x - std::sqrt(x * x - 1.0); }

/// Closed-form spectrum for sin(theta1) sin(theta2) > 0. The band
/// [m_gamma, M_gamma] of values (lambda + 1/lambda)/2 is clipped against
/// [-1, 1]: the overlap lies on the unit circle, the excess maps to the real
/// axis through f+-(x) = x +- sqrt(x^2 - 1).
inline MkoSpectrumSet mko_closed_form(const MkoParams& mp)
{
    if (!(std::sin(mp.theta1) * std::sin(mp.theta2) > 0.0))
        throw InputError("mko_closed_form: requires sin(theta1) sin(theta2) > 0 (got " +
                         std::to_string(std::sin(mp.theta1) * std::sin(mp.theta2)) + ")");
    if (!(mp.gamma >= 0.0))
        throw InputError("mko_closed_form: gamma must be non-negative");

    MkoSpectrumSet set;
    const double m = mp.m_gamma();
    const double M = mp.M_gamma();
    set.m_gamma = m;
    set.M_gamma = M;
    set.gamma0 = mp.gamma_threshold(0);
    set.gamma1 = mp.gamma_threshold(1);

    const double lo = std::max(m, -1.0);
    const double hi = std::min(M, 1.0);
    const bool has_excess = m < -1.0 || M > 1.0;
    const bool circle = lo < hi || (lo == hi && !has_excess);
    if (circle)
        set.circle_cos_interval = Interval{lo, hi};

    if (m < -1.0) {
        const double edge = std::min(M, -1.0);
        if (edge == -1.0) {
            set.real_intervals.push_back({f_minus(m), f_plus(m)});
        } else {
            set.real_intervals.push_back({f_minus(m), f_minus(edge)});
            set.real_intervals.push_back({f_plus(edge), f_plus(m)});
        }
    }
    if (M > 1.0) {
        const double edge = std::max(m, 1.0);
        if (edge == 1.0) {
            set.real_intervals.push_back({f_minus(M), f_plus(M)});
        } else {
            set.real_intervals.push_back({f_minus(M), f_minus(edge)});
            set.real_intervals.push_back({f_plus(edge), f_plus(M)});
        }
    }

    if (circle && !has_excess)
        set.regime = MkoRegime::circle_only;
    else if (circle)
        set.regime = MkoRegime::mixed;
    else
        set.regime = MkoRegime::real_only;
    return set;
}

/// Euclidean distance from z to the closed-form set.
inline double distance_to_set(const MkoSpectrumSet& set, Complex z)
{
    double best = std::numeric_limits<double>::infinity();
    if (set.circle_cos_interval) {
        const double lo_angle = std::acos(std::clamp(set.circle_cos_interval->hi, -1.0, 1.0));
        const double hi_angle = std::acos(std::clamp(set.circle_cos_interval->lo, -1.0, 1.0));
        const double mod = std::abs(z);
        const double angle = std::abs(std::arg(z));
        if (mod > 0.0 && angle >= lo_angle && angle <= hi_angle) {
            best = std::abs(mod - 1.0);
        } else {
            for (double ang : {lo_angle, hi_angle})
                for (double sign : {1.0, -1.0})
                    best = std::min(best, std::abs(z - std::polar(1.0, sign * ang)));
        }
    }
    for (const auto& iv : set.real_intervals) {
        const double x = std::clamp(z.real(), iv.lo, iv.hi);
        best = std::min(best, std::abs(z - Complex(x, 0.0)));
    }
    return best;
}

struct MomentumSample {
    double xi = 0.0;
    std::array<Complex, 2> eigenvalues;
};

/// Eigenvalues of U_gamma(xi) on the grid xi_j = 2 pi j / grid.
inline std::vector<MomentumSample> mko_sample(const MkoParams& mp, int grid)
{
    if (grid <= 0)
        throw InputError("mko_sample: grid must be positive");
    std::vector<MomentumSample> out;
    out.reserve(static_cast<std::size_t>(grid));
    for (int j = 0; j < grid; ++j) {
        const double xi = 2.0 * std::numbers::pi * j / grid;
        out.push_back({xi, eigenvalues2(mko_momentum_matrix(mp, xi))});
    }
    return out;
}

/// Dense point cloud on the closed-form set, roughly `per_component` points
/// on each arc and interval.
inline std::vector<Complex> discretize_set(const MkoSpectrumSet& set, int per_component)
{
    std::vector<Complex> pts;
    if (set.circle_cos_interval) {
        const double lo_angle = std::acos(std::clamp(set.circle_cos_interval->hi, -1.0, 1.0));
        const double hi_angle = std::acos(std::clamp(set.circle_cos_interval->lo, -1.0, 1.0));
        for (int i = 0; i <= per_component; ++i) {
            const double ang = lo_angle + (hi_angle - lo_angle) * i / per_component;
            pts.push_back(std::polar(1.0, ang));
            pts.push_back(std::polar(1.0, -ang));
        }
    }
    for (const auto& iv : set.real_intervals)
        for (int i = 0; i <= per_component; ++i)
            pts.emplace_back(iv.lo + (iv.hi - iv.lo) * i / per_component, 0.0);
    return pts;
}

namespace mko_detail {

/// Nearest-neighbour distances through a uniform bucket grid.
class PointIndex {
public:
    PointIndex(const std::vector<Complex>& pts, double cell) : pts_(pts), cell_(cell)
    {
        for (std::size_t i = 0; i < pts_.size(); ++i)
            buckets_[key(cell_of(pts_[i].real()), cell_of(pts_[i].imag()))].push_back(i);
    }

    double nearest(Complex z) const
    {
        const long cx = cell_of(z.real());
        const long cy = cell_of(z.imag());
        double best = std::numeric_limits<double>::infinity();
        for (long ring = 0;; ++ring) {
            for (long dx = -ring; dx <= ring; ++dx) {
                for (long dy = -ring; dy <= ring; ++dy) {
                    if (std::max(std::labs(dx), std::labs(dy)) != ring)
                        continue;
                    const auto it = buckets_.find(key(cx + dx, cy + dy));
                    if (it == buckets_.end())
                        continue;
                    for (std::size_t i : it->second)
                        best = std::min(best, std::abs(z - pts_[i]));
                }
            }
            // Every unvisited bucket is at least ring * cell away.
            if (best <= ring * cell_ || ring > 1'000'000)
                return best;
        }
    }

private:
    long cell_of(double v) const { return static_cast<long>(std::floor(v / cell_)); }
    static long long key(long x, long y) { return (static_cast<long long>(x) << 32) ^ (y & 0xffffffffLL); }

    const std::vector<Complex>& pts_;
    double cell_;
    std::unordered_map<long long, std::vector<std::size_t>> buckets_;
};

} // namespace mko_detail

struct HausdorffResult {
    double samples_to_set = 0.0;  ///< max over samples of the distance to the set
    double set_to_samples = 0.0;  ///< max over the discretised set of the distance to samples
    double value() const noexcept { return std::max(samples_to_set, set_to_samples); }
};

inline HausdorffResult mko_hausdorff(const MkoSpectrumSet& set, const std::vector<MomentumSample>& samples,
                                     int set_resolution = 200'000)
{
    std::vector<Complex> pts;
    pts.reserve(2 * samples.size());
    HausdorffResult h;
    for (const auto& s : samples) {
        for (const auto& z : s.eigenvalues) {
            pts.push_back(z);
            h.samples_to_set = std::max(h.samples_to_set, distance_to_set(set, z));
        }
    }
    const mko_detail::PointIndex index(pts, 0.01);
    for (const auto& z : discretize_set(set, set_resolution))
        h.set_to_samples = std::max(h.set_to_samples, index.nearest(z));
    return h;
}

// Finite ring truncation with N sites; ordering index = component * N + site.

namespace mko_detail {

inline linalg::ComplexMatrix on_ring(const Matrix2& m, int n)
{
    linalg::ComplexMatrix out(2 * n, 2 * n);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.block(r * n, c * n, n, n) = m(r, c) * linalg::identity(n);
    return out;
}

inline linalg::ComplexMatrix ring_walk_shift(int n)
{
    linalg::ComplexMatrix l = linalg::ComplexMatrix::Zero(n, n);
    for (int x = 0; x < n; ++x)
        l(x, (x + 1) % n) = 1.0;
    linalg::ComplexMatrix s = linalg::ComplexMatrix::Zero(2 * n, 2 * n);
    s.topLeftCorner(n, n) = l;
    s.bottomRightCorner(n, n) = l.adjoint();
    return s;
}

} // namespace mko_detail

/// U_gamma on a periodic ring of n sites.
inline linalg::ComplexMatrix mko_ring_evolution(const MkoParams& mp, int n)
{
    using namespace mko_detail;
    if (n < 3)
        throw InputError("mko ring: at least 3 sites required");
    const auto s = ring_walk_shift(n);
    return s * on_ring(gain(mp.gamma) * phase(mp.phi) * coin(mp.theta2), n) * s *
           on_ring(gain(-mp.gamma) * phase(mp.phi) * coin(mp.theta1), n);
}

/// The ring truncation as a chiral pair: S = S_mko, C = C_mko, with a > 0 > b
/// the eigenvalues of C_mko and d projecting each site onto the
/// a-eigenvector.
inline ChiralPair mko_ring_pair(const MkoParams& mp, int n)
{
    using namespace mko_detail;
    if (n < 3)
        throw InputError("mko ring: at least 3 sites required");
    const auto shift = ring_walk_shift(n);
    linalg::ComplexMatrix s = shift * on_ring(coin(mp.theta1), n) * shift * on_ring(sigma2(), n);
    s = (s + s.adjoint()) / 2.0;

    const Matrix2 c = c_mko(mp);
    Eigen::SelfAdjointEigenSolver<Matrix2> eig((c + c.adjoint()) / 2.0);
    const double b = eig.eigenvalues()(0);
    const double a = eig.eigenvalues()(1);
    const Eigen::Vector2cd v = eig.eigenvectors().col(1);
    linalg::ComplexMatrix d = linalg::ComplexMatrix::Zero(n, 2 * n);
    for (int x = 0; x < n; ++x) {
        d(x, x) = std::conj(v(0));
        d(x, n + x) = std::conj(v(1));
    }
    return build_chiral_pair(std::move(s), std::move(d), a, b);
}

} // namespace chiral::walks
