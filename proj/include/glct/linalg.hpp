/******************************************************************************
 * Copyright 2026 The glct Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * @file linalg.hpp
 * @brief Canonicalized eigendecomposition of normal matrices and fractional
 *        powers of unit-modulus spectra.
 *****************************************************************************/
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace glct {

using Complex = std::complex<double>;

/// Max-abs entry of a matrix or vector expression; 0 for empty input.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

namespace detail {

/// Eigenvalue equality threshold below which eigenpairs are treated as one
/// degenerate cluster and their span gets a basis-independent orthonormal
/// basis.
inline constexpr double kClusterTol = 1e-8;

/// Imaginary parts at most this far from the real axis are snapped onto it
/// before taking an argument, so the sign of rounding noise cannot flip the
/// principal branch at -1.
inline constexpr double kAxisSnapTol = 1e-12;

/// A real matrix M qualifies for the scaled-orthogonal fast path when
/// max-abs(MᵀM - cI) <= kOrthDetectTol * max(1, c) for the Gram scalar c.
inline constexpr double kOrthDetectTol = 1e-10;

/// Eigenvalues of the symmetric part closer than this are handled as a
/// single invariant subspace of the scaled-orthogonal input. Far above
/// solver noise, far below any spectral feature worth separating.
inline constexpr double kOrthGroupGap = 1e-7;

/// Principal argument in (-pi, pi] with the near-axis snap described above.
inline double principal_arg(Complex z) {
    const double im = std::abs(z.imag()) <= kAxisSnapTol ? 0.0 : z.imag();
    const double theta = std::atan2(im, z.real());
    return theta <= -std::numbers::pi ? std::numbers::pi : theta;
}

/// Two-pass modified Gram-Schmidt on the columns of a full-rank, nearly
/// orthonormal block.
inline void orthonormalize_columns(Eigen::Ref<Eigen::MatrixXcd> block) {
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index k = 0; k < c; ++k)
                block.col(c) -= block.col(k) * block.col(k).dot(block.col(c));
        block.col(c) /= block.col(c).norm();
    }
}

}  // namespace detail

/// Canonicalized eigendecomposition of a normal matrix. Columns of
/// `eigenvectors` are orthonormal eigenvectors matching `eigenvalues`.
struct EigenBasis {
    enum class SourceKind { SelfAdjoint, GeneralNormal };

    Eigen::VectorXcd eigenvalues;
    Eigen::MatrixXcd eigenvectors;
    SourceKind source_kind = SourceKind::GeneralNormal;

    Eigen::Index n() const { return eigenvalues.size(); }
};

/**
 * Rewrites an eigendecomposition into canonical form:
 *  - eigenpairs sorted by (Re descending, Im descending, original index),
 *    with components quantized by the cluster tolerance so the order is
 *    stable under solver noise;
 *  - within clusters of eigenvalues equal to 1e-8, the eigenvector block is
 *    orthonormalized and rotated onto the eigenvectors of the compressed
 *    position operator B^H diag(0..n-1) B, which depends only on the spanned
 *    subspace and not on the basis the solver happened to emit;
 *  - each column's phase is fixed so that its first entry of modulus > 1e-10
 *    is real and positive.
 */
inline EigenBasis canonicalize_eigenpairs(const EigenBasis& basis) {
    const Eigen::Index n = basis.n();
    EigenBasis out = basis;
    if (n == 0) return out;

    // Sort keys are quantized by the cluster tolerance so solver noise in a
    // nominally tied component (e.g. the real parts of a conjugate pair)
    // cannot reorder pairs; integer keys keep the comparator a strict weak
    // ordering, which a direct tolerance comparison would not be.
    const auto bucket = [](double v) {
        const double q = v / detail::kClusterTol;
        if (q >= 9.0e18) return std::numeric_limits<long long>::max();
        if (q <= -9.0e18) return std::numeric_limits<long long>::min();
        return std::llround(q);
    };
    std::vector<Eigen::Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        const Complex a = basis.eigenvalues(i), b = basis.eigenvalues(j);
        const long long ar = bucket(a.real()), br = bucket(b.real());
        if (ar != br) return ar > br;
        const long long ai = bucket(a.imag()), bi = bucket(b.imag());
        if (ai != bi) return ai > bi;
        return i < j;
    });
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues(k) = basis.eigenvalues(order[static_cast<size_t>(k)]);
        out.eigenvectors.col(k) = basis.eigenvectors.col(order[static_cast<size_t>(k)]);
    }

    // Degenerate clusters: consecutive runs of eigenvalues within kClusterTol.
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index end = start + 1;
        while (end < n &&
               std::abs(out.eigenvalues(end) - out.eigenvalues(end - 1)) <= detail::kClusterTol) {
            ++end;
        }
        const Eigen::Index size = end - start;
        if (size >= 2) {
            // Orthonormalize the solver's cluster block, then rotate it onto
            // the eigenvectors of the compressed position operator
            // C = B^H diag(0..n-1) B. A change of cluster basis B -> B U maps
            // C to U^H C U, so the rotated block depends only on the spanned
            // subspace; C's eigenvalue gaps are of order n / size, which
            // keeps the rotation well conditioned even for clusters spanning
            // half the space.
            auto block = out.eigenvectors.middleCols(start, size);
            detail::orthonormalize_columns(block);
            Eigen::MatrixXcd weighted = block;
            for (Eigen::Index r = 0; r < n; ++r) weighted.row(r) *= static_cast<double>(r);
            Eigen::MatrixXcd compressed = block.adjoint() * weighted;
            compressed = ((compressed + compressed.adjoint()) / 2.0).eval();
            const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> rotation(compressed);
            const Eigen::MatrixXcd rotated = block * rotation.eigenvectors();
            out.eigenvectors.middleCols(start, size) = rotated;
        }
        start = end;
    }

    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            const Complex e = out.eigenvectors(r, c);
            if (std::abs(e) > 1e-10) {
                out.eigenvectors.col(c) *= std::conj(e) / std::abs(e);
                break;
            }
        }
    }
    return out;
}

namespace detail {

struct RawEig {
    Eigen::VectorXcd values;
    Eigen::MatrixXcd vectors;
    EigenBasis::SourceKind kind = EigenBasis::SourceKind::GeneralNormal;
};

/// Rejects matrices whose commutator residual (in original, unscaled units)
/// exceeds 1e-8 (1 + max-abs)²; only normal matrices diagonalize unitarily.
inline void require_normal(double residual_normalized, double scale) {
    const double residual = residual_normalized * scale * scale;
    const double tol = 1e-8 * (1.0 + scale) * (1.0 + scale);
    if (residual > tol) {
        std::ostringstream msg;
        msg << "eig_normal: matrix is not normal, hence not unitarily diagonalizable "
            << "(commutator residual " << residual << " exceeds tolerance " << tol
            << "); Jordan-form inputs are not supported";
        throw std::invalid_argument(msg.str());
    }
}

/**
 * Eigendecomposition of a real matrix satisfying moᵀ mo = s² I. Such a
 * matrix commutes with its symmetric part, so every eigenspace of
 * (mo + moᵀ)/(2s) is mo-invariant and compressing mo onto it leaves a small
 * dense eigenproblem. One self-adjoint solve plus two multiplies replaces
 * the real Schur iteration, which is an order of magnitude slower for the
 * large orthogonal Fourier matrices this library feeds through here.
 */
inline RawEig solve_scaled_orthogonal(const Eigen::MatrixXd& mo, double s) {
    const Eigen::Index n = mo.rows();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> hsolver(
        Eigen::MatrixXd((mo + mo.transpose()) / (2.0 * s)));
    if (hsolver.info() != Eigen::Success)
        throw std::runtime_error("eig_normal: self-adjoint eigensolver failed to converge");
    const Eigen::VectorXd& mu = hsolver.eigenvalues();
    const Eigen::MatrixXd& u = hsolver.eigenvectors();
    const Eigen::MatrixXd mo_u = mo * u;

    RawEig raw;
    raw.values.resize(n);
    raw.vectors.resize(n, n);
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index end = start + 1;
        while (end < n && mu(end) - mu(end - 1) <= kOrthGroupGap) ++end;
        const Eigen::Index size = end - start;
        if (size == 1) {
            raw.values(start) = Complex(u.col(start).dot(mo_u.col(start)), 0.0);
            raw.vectors.col(start) = u.col(start).cast<Complex>();
        } else {
            const Eigen::MatrixXd compressed =
                u.middleCols(start, size).transpose() * mo_u.middleCols(start, size);
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> csolver(compressed.cast<Complex>());
            if (csolver.info() != Eigen::Success)
                throw std::runtime_error("eig_normal: complex eigensolver failed to converge");
            Eigen::MatrixXcd w = csolver.eigenvectors();
            orthonormalize_columns(w);
            raw.values.segment(start, size) = csolver.eigenvalues();
            raw.vectors.middleCols(start, size) = u.middleCols(start, size) * w;
        }
        start = end;
    }
    return raw;
}

/// Solves the eigenproblem for a matrix already scaled to max-abs entry 1,
/// rejecting non-normal input. Self-adjoint input routes to the self-adjoint
/// solver, real scaled-orthogonal input to the invariant-subspace fast path,
/// other real input to the real Schur solver, the rest to the complex solver.
/// The Gram products pay for both the normality check and the fast-path
/// detection.
inline RawEig solve_normalized(const Eigen::MatrixXcd& mn, double scale) {
    RawEig raw;
    if (max_abs(mn.imag()) == 0.0) {
        const Eigen::MatrixXd mr = mn.real();
        if (mr == mr.transpose()) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mr);
            if (solver.info() != Eigen::Success)
                throw std::runtime_error("eig_normal: self-adjoint eigensolver failed to converge");
            raw.values = solver.eigenvalues().cast<Complex>();
            raw.vectors = solver.eigenvectors().cast<Complex>();
            raw.kind = EigenBasis::SourceKind::SelfAdjoint;
            return raw;
        }
        const Eigen::MatrixXd gram_right = mr.transpose() * mr;
        const Eigen::MatrixXd gram_left = mr * mr.transpose();
        require_normal(max_abs(Eigen::MatrixXd(gram_right - gram_left)), scale);
        const double c = gram_right.diagonal().mean();
        const double orth_defect = max_abs(Eigen::MatrixXd(
            gram_right - c * Eigen::MatrixXd::Identity(mr.rows(), mr.cols())));
        if (c > 0.0 && orth_defect <= kOrthDetectTol * std::max(1.0, c))
            return solve_scaled_orthogonal(mr, std::sqrt(c));
        Eigen::EigenSolver<Eigen::MatrixXd> solver(mr);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("eig_normal: real eigensolver failed to converge");
        raw.values = solver.eigenvalues();
        raw.vectors = solver.eigenvectors();
        return raw;
    }
    if (mn == mn.adjoint()) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mn);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("eig_normal: self-adjoint eigensolver failed to converge");
        raw.values = solver.eigenvalues().cast<Complex>();
        raw.vectors = solver.eigenvectors();
        raw.kind = EigenBasis::SourceKind::SelfAdjoint;
        return raw;
    }
    require_normal(max_abs(Eigen::MatrixXcd(mn * mn.adjoint() - mn.adjoint() * mn)), scale);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(mn);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_normal: complex eigensolver failed to converge");
    raw.values = solver.eigenvalues();
    raw.vectors = solver.eigenvectors();
    return raw;
}

}  // namespace detail

/**
 * Canonical eigendecomposition of a normal matrix.
 *
 * The input is rejected unless max-abs(M Mᴴ - Mᴴ M) <= 1e-8 (1 + max-abs M)²,
 * since only normal matrices diagonalize unitarily. The matrix is scaled to
 * unit max-abs before solving (so positively scaled inputs see bit-identical
 * solver input), eigenvalues are scaled back, and the result is canonicalized.
 * Deterministic for identical input bits.
 */
inline EigenBasis eig_normal(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("eig_normal: matrix must be square");
    const Eigen::Index n = m.rows();
    const double scale = max_abs(m);
    if (!std::isfinite(scale))
        throw std::invalid_argument("eig_normal: matrix has non-finite entries");

    EigenBasis basis;
    if (n == 0) return basis;
    if (scale == 0.0) {
        basis.eigenvalues = Eigen::VectorXcd::Zero(n);
        basis.eigenvectors = Eigen::MatrixXcd::Identity(n, n);
        basis.source_kind = EigenBasis::SourceKind::SelfAdjoint;
        return basis;
    }

    const detail::RawEig raw = detail::solve_normalized(m / scale, scale);
    basis.eigenvalues = raw.values * scale;
    basis.eigenvectors = raw.vectors;
    basis.source_kind = raw.kind;
    return canonicalize_eigenpairs(basis);
}

/**
 * Entrywise fractional power of a unit-modulus spectrum: each eigenvalue is
 * renormalized onto the unit circle and mapped to exp(i * order * theta) with
 * theta its principal argument in (-pi, pi].
 */
inline Eigen::VectorXcd frac_unitary_power(const Eigen::VectorXcd& eigenvalues, double order) {
    Eigen::VectorXcd out(eigenvalues.size());
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
        const double mod = std::abs(eigenvalues(k));
        if (std::abs(mod - 1.0) > 1e-8) {
            std::ostringstream msg;
            msg << "frac_unitary_power: eigenvalue " << k << " has modulus " << mod
                << ", outside [1 - 1e-8, 1 + 1e-8]";
            throw std::invalid_argument(msg.str());
        }
        const double theta = detail::principal_arg(eigenvalues(k) / mod);
        out(k) = std::polar(1.0, order * theta);
    }
    return out;
}

/// Max-abs entry of (M Mᴴ - I); zero exactly for unitary M.
inline double unitarity_defect(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("unitarity_defect: matrix must be square");
    return max_abs(Eigen::MatrixXcd(
        m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols())));
}

}  // namespace glct
