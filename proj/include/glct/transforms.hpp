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
 * @file transforms.hpp
 * @brief Graph Fourier, fractional Fourier, and linear canonical transform
 *        operators: the chirp / scaling / fractional three-stage cascade,
 *        its explicit inverse, and the cycle-graph DLCT reference oracle.
 *****************************************************************************/
#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "glct/cache.hpp"
#include "glct/graph.hpp"
#include "glct/linalg.hpp"
#include "glct/params.hpp"

namespace glct {

/// Law for the chirp-multiplication diagonal. SpectralIndex phases grow with
/// the spectral index k as (pi/2) k (xi k + f); VertexNormalized carries the
/// classical DLCT 1/N sampling normalization, pi xi k^2 / n.
enum class ChirpMode { SpectralIndex, VertexNormalized };

/// Source of the scaling-stage basis Q_sigma. GftEigenbasis diagonalizes the
/// Fourier matrix of the sigma-scaled graph (so Q_1 equals Q and positive
/// scaling leaves the basis invariant); AdjacencyEigenbasis diagonalizes the
/// scaled adjacency (1/sigma) A itself.
enum class ScalingMode { GftEigenbasis, AdjacencyEigenbasis };

struct GlctOptions {
    ChirpMode chirp_mode = ChirpMode::SpectralIndex;
    ScalingMode scaling_mode = ScalingMode::GftEigenbasis;
    double chirp_offset_f = 0.0;
};

/// A constructed GLCT operator together with the spectral data it was built
/// from: V diagonalizing the adjacency, (Q, Lambda_F) diagonalizing the
/// Fourier matrix, and the scaling basis Q_sigma.
struct GlctOperator {
    Eigen::MatrixXcd matrix;
    LctParams params;
    DecomposedParams decomposed;
    GlctOptions options;
    EigenBasis adjacency_basis;
    EigenBasis fourier_basis;
    Eigen::MatrixXcd scaling_q;

    Eigen::Index n() const { return matrix.rows(); }
};

namespace detail {

/// eig_normal with a content-addressed cache in front. The key is the digest
/// of the max-abs-normalized matrix, so positively scaled copies share an
/// entry whenever the scaling divides out exactly (it does for powers of
/// two); eigenvalues are rescaled on the way out. With GLCT_CACHE_DIR set,
/// entries persist across processes.
inline EigenBasis eig_normal_cached(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("eig_normal: matrix must be square");
    const double scale = max_abs(m);
    if (!std::isfinite(scale) || scale == 0.0 || m.size() == 0) return eig_normal(m);

    const Eigen::MatrixXcd normalized = m / scale;
    Fnv1a64 digest;
    hash_matrix(digest, normalized);
    const std::uint64_t key = digest.value();

    std::shared_ptr<const EigenBasis> entry = normalized_eig_cache().find(key);
    if (entry && entry->n() != m.rows()) entry = nullptr;
    if (!entry) {
        if (const auto dir = cache_dir()) {
            auto loaded = load_basis_file(*dir / "eig" / (hex_key(key) + ".bin"));
            if (loaded && loaded->n() == m.rows())
                entry = normalized_eig_cache().insert(
                    key, std::make_shared<EigenBasis>(std::move(*loaded)));
        }
    }
    if (!entry) {
        auto computed = std::make_shared<const EigenBasis>(eig_normal(normalized));
        if (const auto dir = cache_dir())
            store_basis_file(*dir / "eig" / (hex_key(key) + ".bin"), *computed);
        entry = normalized_eig_cache().insert(key, std::move(computed));
    }

    EigenBasis out = *entry;
    out.eigenvalues *= scale;
    return out;
}

/// Canonical eigendecomposition of the graph adjacency.
inline EigenBasis adjacency_eigenbasis(const Graph& g) {
    return eig_normal_cached(g.adjacency.cast<Complex>());
}

}  // namespace detail

/// Graph Fourier transform matrix F = V^-1 = V^H, with V the canonical
/// eigenvector matrix of the adjacency. Deterministic for identical input.
inline Eigen::MatrixXcd gft_matrix(const Graph& g) {
    return detail::adjacency_eigenbasis(g).eigenvectors.adjoint();
}

namespace detail {

inline void require_signal_size(const GraphSignal& s, Eigen::Index n, const char* where) {
    if (s.values.size() != n) {
        std::ostringstream msg;
        msg << where << ": signal length " << s.values.size() << " does not match graph size "
            << n;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace detail

/// Forward GFT: s_hat = F s.
inline GraphSignal gft(const Graph& g, const GraphSignal& s) {
    const EigenBasis basis = detail::adjacency_eigenbasis(g);
    detail::require_signal_size(s, basis.n(), "gft");
    return GraphSignal{basis.eigenvectors.adjoint() * s.values};
}

/// Inverse GFT: s = V s_hat.
inline GraphSignal igft(const Graph& g, const GraphSignal& s_hat) {
    const EigenBasis basis = detail::adjacency_eigenbasis(g);
    detail::require_signal_size(s_hat, basis.n(), "igft");
    return GraphSignal{basis.eigenvectors * s_hat.values};
}

/// Fractional GFT matrix F^a = Q Lambda^a Q^H, where (Q, Lambda) is the
/// canonical eigendecomposition of F and Lambda^a raises the unit-modulus
/// spectrum through principal arguments. The order relates to the fractional
/// angle by alpha = (pi/2) a.
inline Eigen::MatrixXcd gfrft_matrix(const Graph& g, double order_a) {
    const EigenBasis f_basis = detail::eig_normal_cached(gft_matrix(g));
    const Eigen::VectorXcd powered = frac_unitary_power(f_basis.eigenvalues, order_a);
    return f_basis.eigenvectors * powered.asDiagonal() * f_basis.eigenvectors.adjoint();
}

/// Diagonal of the chirp-multiplication stage Lambda_xi; every entry has unit
/// modulus. The offset f only enters the spectral-index law.
inline Eigen::VectorXcd chirp_diag(Eigen::Index n, double xi, const GlctOptions& options = {}) {
    if (n < 1) throw std::invalid_argument("chirp_diag: n must be >= 1");
    Eigen::VectorXcd diag(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const double phase =
            options.chirp_mode == ChirpMode::SpectralIndex
                ? (std::numbers::pi / 2.0) * kd * (xi * kd + options.chirp_offset_f)
                : std::numbers::pi * xi * kd * kd / static_cast<double>(n);
        diag(k) = std::polar(1.0, phase);
    }
    return diag;
}

/// Scaling-stage basis Q_sigma. GftEigenbasis mode diagonalizes the Fourier
/// matrix of the sigma-scaled graph; AdjacencyEigenbasis mode diagonalizes
/// (1/sigma) A directly.
inline Eigen::MatrixXcd scaling_basis(const Graph& g, double sigma,
                                      const GlctOptions& options = {}) {
    const Graph scaled = scaled_adjacency(g, sigma);
    if (options.scaling_mode == ScalingMode::AdjacencyEigenbasis)
        return detail::adjacency_eigenbasis(scaled).eigenvectors;
    return detail::eig_normal_cached(gft_matrix(scaled)).eigenvectors;
}

namespace detail {

inline std::uint64_t operator_digest(const Graph& g, const LctParams& p,
                                     const GlctOptions& options) {
    Fnv1a64 digest;
    hash_matrix(digest, g.adjacency);
    digest.update_value(p.a);
    digest.update_value(p.b);
    digest.update_value(p.c);
    digest.update_value(p.d);
    digest.update_value<std::uint8_t>(options.chirp_mode == ChirpMode::SpectralIndex ? 0 : 1);
    digest.update_value<std::uint8_t>(options.scaling_mode == ScalingMode::GftEigenbasis ? 0
                                                                                         : 1);
    digest.update_value(options.chirp_offset_f);
    return digest.value();
}

}  // namespace detail

/**
 * GLCT operator L = Lambda_xi Q_sigma Lambda^alpha Q^H for parameters
 * (a, b, c, d) with decomposition (xi, sigma, alpha):
 *  - (Q, Lambda_F) canonically diagonalize the Fourier matrix F;
 *  - Lambda^alpha = frac_unitary_power(Lambda_F, 2 alpha / pi), so that
 *    alpha = pi/2 reproduces the full GFT;
 *  - Q_sigma = scaling_basis(g, sigma, options);
 *  - Lambda_xi = diag(chirp_diag(N, xi, options)).
 * Assembled operators are cached by (adjacency, params, options) digest;
 * the spectral bases are always populated.
 */
inline GlctOperator glct_operator(const Graph& g, const LctParams& p,
                                  const GlctOptions& options = {}) {
    validate_params(p);
    GlctOperator op;
    op.params = p;
    op.decomposed = decompose_params(p);
    op.options = options;
    op.adjacency_basis = detail::adjacency_eigenbasis(g);
    op.fourier_basis = detail::eig_normal_cached(op.adjacency_basis.eigenvectors.adjoint());
    op.scaling_q = scaling_basis(g, op.decomposed.sigma, options);

    const Eigen::Index n = g.n();
    const std::uint64_t key = detail::operator_digest(g, p, options);
    std::shared_ptr<const Eigen::MatrixXcd> cached = detail::operator_matrix_cache().find(key);
    if (cached && cached->rows() == n) {
        op.matrix = *cached;
        return op;
    }
    if (const auto dir = detail::cache_dir()) {
        auto loaded = detail::load_matrix_file(*dir / "op" / (detail::hex_key(key) + ".bin"));
        if (loaded && loaded->rows() == n && loaded->cols() == n) {
            op.matrix = std::move(*loaded);
            if (n <= detail::kMemoryOpCacheMaxN)
                detail::operator_matrix_cache().insert(
                    key, std::make_shared<Eigen::MatrixXcd>(op.matrix));
            return op;
        }
    }

    const Eigen::VectorXcd chirp = chirp_diag(n, op.decomposed.xi, options);
    const Eigen::VectorXcd powered = frac_unitary_power(
        op.fourier_basis.eigenvalues, 2.0 * op.decomposed.alpha / std::numbers::pi);
    Eigen::MatrixXcd staged = chirp.asDiagonal() * op.scaling_q;
    staged = staged * powered.asDiagonal();
    op.matrix.noalias() = staged * op.fourier_basis.eigenvectors.adjoint();

    if (n <= detail::kMemoryOpCacheMaxN)
        detail::operator_matrix_cache().insert(key,
                                               std::make_shared<Eigen::MatrixXcd>(op.matrix));
    if (const auto dir = detail::cache_dir())
        detail::store_matrix_file(*dir / "op" / (detail::hex_key(key) + ".bin"), op.matrix);
    return op;
}

/// Forward GLCT of a signal: s_hat = L s.
inline GraphSignal glct(const Graph& g, const GraphSignal& s, const LctParams& p,
                        const GlctOptions& options = {}) {
    const GlctOperator op = glct_operator(g, p, options);
    detail::require_signal_size(s, op.n(), "glct");
    return GraphSignal{op.matrix * s.values};
}

/// Inverse GLCT as the explicit factor product Q Lambda^-alpha Q_sigma^H
/// Lambda_-xi (equal to the conjugate transpose of the forward operator, but
/// applied term by term).
inline GraphSignal iglct(const Graph& g, const GraphSignal& s_hat, const LctParams& p,
                         const GlctOptions& options = {}) {
    const GlctOperator op = glct_operator(g, p, options);
    detail::require_signal_size(s_hat, op.n(), "iglct");
    const Eigen::VectorXcd chirp = chirp_diag(op.n(), op.decomposed.xi, options);
    const Eigen::VectorXcd powered = frac_unitary_power(
        op.fourier_basis.eigenvalues, 2.0 * op.decomposed.alpha / std::numbers::pi);
    Eigen::VectorXcd y = chirp.conjugate().asDiagonal() * s_hat.values;
    y = op.scaling_q.adjoint() * y;
    y = powered.conjugate().asDiagonal() * y;
    return GraphSignal{op.fourier_basis.eigenvectors * y};
}

/// Analytic eigenpairs of the unit-weight directed cycle: Fourier mode
/// v_k[m] = exp(2 pi i k m / n) / sqrt(n) with eigenvalue exp(-2 pi i k / n),
/// in raw index order (not canonicalized).
inline EigenBasis analytic_cycle_eigenbasis(Eigen::Index n) {
    if (n < 2) throw std::invalid_argument("analytic_cycle_eigenbasis: n must be >= 2");
    EigenBasis basis;
    basis.eigenvalues.resize(n);
    basis.eigenvectors.resize(n, n);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        basis.eigenvalues(k) = std::polar(1.0, -step * static_cast<double>(k));
        for (Eigen::Index m = 0; m < n; ++m)
            basis.eigenvectors(m, k) =
                std::polar(inv_sqrt_n, step * static_cast<double>(k) * static_cast<double>(m));
    }
    return basis;
}

/// The unitary DFT matrix with rows in the library's canonical eigenvalue
/// order: the conjugate transpose of the canonicalized analytic cycle
/// eigenbasis. This is the matrix gft_matrix(cycle_graph(n)) converges to.
inline Eigen::MatrixXcd canonical_dft_matrix(Eigen::Index n) {
    return canonicalize_eigenpairs(analytic_cycle_eigenbasis(n)).eigenvectors.adjoint();
}

/**
 * Reference DLCT operator: the same three-stage cascade, built from the
 * analytically constructed unitary DFT matrix instead of a graph adjacency
 * pipeline. The DFT matrix is taken in canonical eigenvalue order so both
 * pipelines share one canonicalization; it is then eigendecomposed with the
 * same machinery and the chirp, scaling, and fractional stages are applied
 * identically. Independent oracle for the cycle-graph reduction.
 */
inline Eigen::MatrixXcd dlct_reference(Eigen::Index n, const LctParams& p,
                                       const GlctOptions& options = {}) {
    if (n < 2) throw std::invalid_argument("dlct_reference: n must be >= 2");
    validate_params(p);
    const DecomposedParams dec = decompose_params(p);
    const Eigen::MatrixXcd dft = canonical_dft_matrix(n);
    const EigenBasis dft_basis = detail::eig_normal_cached(dft);
    const Eigen::MatrixXcd q_sigma =
        options.scaling_mode == ScalingMode::AdjacencyEigenbasis
            ? Eigen::MatrixXcd(dft.adjoint())
            : dft_basis.eigenvectors;
    const Eigen::VectorXcd chirp = chirp_diag(n, dec.xi, options);
    const Eigen::VectorXcd powered =
        frac_unitary_power(dft_basis.eigenvalues, 2.0 * dec.alpha / std::numbers::pi);
    Eigen::MatrixXcd staged = chirp.asDiagonal() * q_sigma;
    staged = staged * powered.asDiagonal();
    return staged * dft_basis.eigenvectors.adjoint();
}

}  // namespace glct
