// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

// Seeded random chiral pairs for property checks.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/QR>

#include "chiral_spectra/chiral.hpp"
#include "chiral_spectra/linalg.hpp"

namespace chiral::random {

using linalg::Complex;
using linalg::ComplexMatrix;

/// Haar-distributed n x n unitary (QR of a complex Gaussian matrix with the
/// phases of R's diagonal absorbed into Q).
inline ComplexMatrix random_unitary(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            z(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * linalg::identity(n);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0)
            q.col(j) *= r(j, j) / mag;
    }
    return q;
}

/// Q diag(+-1) Q^* with at least one eigenvalue of each sign; symmetrised
/// and re-squared so that S = S^* and S^2 = I hold to rounding.
inline ComplexMatrix random_involution(int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> plus_count(1, n - 1);
    const int plus = plus_count(rng);
    Eigen::VectorXcd diag = Eigen::VectorXcd::Constant(n, Complex(-1.0, 0.0));
    diag.head(plus).setConstant(Complex(1.0, 0.0));
    const ComplexMatrix q = random_unitary(n, rng);
    ComplexMatrix s = q * diag.asDiagonal() * q.adjoint();
    return (s + s.adjoint()) / 2.0;
}

/// m orthonormal rows of a random unitary.
inline ComplexMatrix random_coisometry(int m, int n, std::mt19937_64& rng)
{
    return random_unitary(n, rng).topRows(m);
}

struct RandomPairOptions {
    int min_dim = 3;
    int max_dim = 10;
};

/// Random pair with 1 <= dim K < dim H, S != +-I and a, b drawn from
/// [-3, -0.2] ∪ [0.2, 3] with |a| - |b| bounded away from zero.
inline ChiralPair random_pair(std::mt19937_64& rng, const RandomPairOptions& opt = {})
{
    std::uniform_int_distribution<int> dim(opt.min_dim, opt.max_dim);
    const int n = dim(rng);
    std::uniform_int_distribution<int> kdim(1, n - 1);
    const int m = kdim(rng);
    std::uniform_real_distribution<double> mag(0.2, 3.0);
    std::bernoulli_distribution sign(0.5);
    double a = 0.0;
    double b = 0.0;
    do {
        a = mag(rng) * (sign(rng) ? 1.0 : -1.0);
        b = mag(rng) * (sign(rng) ? 1.0 : -1.0);
    } while (std::abs(std::abs(a) - std::abs(b)) < 0.1);
    ComplexMatrix s = random_involution(n, rng);
    ComplexMatrix d = random_coisometry(m, n, rng);
    return build_chiral_pair(std::move(s), std::move(d), a, b);
}

} // namespace chiral::random
