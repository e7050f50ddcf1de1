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
 * @file cache.hpp
 * @brief Content-addressed caches for eigendecompositions. Purely additive;
 *        concurrent read/insert is safe with last-writer-wins semantics.
 *        GLCT_CACHE_DIR adds an on-disk layer; absent, caching is in-memory.
 *****************************************************************************/
#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "glct/linalg.hpp"

namespace glct::detail {

/// FNV-1a 64-bit running hash over raw bytes.
struct Fnv1a64 {
    std::uint64_t state = 1469598103934665603ULL;

    void update(const void* data, std::size_t len) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            state ^= bytes[i];
            state *= 1099511628211ULL;
        }
    }
    template <typename T>
    void update_value(const T& v) {
        static_assert(std::is_trivially_copyable_v<T>);
        update(&v, sizeof(T));
    }
    std::uint64_t value() const { return state; }
};

inline void hash_matrix(Fnv1a64& h, const Eigen::MatrixXcd& m) {
    h.update_value<std::int64_t>(m.rows());
    h.update_value<std::int64_t>(m.cols());
    if (m.size() > 0) h.update(m.data(), sizeof(Complex) * static_cast<std::size_t>(m.size()));
}

inline void hash_matrix(Fnv1a64& h, const Eigen::MatrixXd& m) {
    h.update_value<std::int64_t>(m.rows());
    h.update_value<std::int64_t>(m.cols());
    if (m.size() > 0) h.update(m.data(), sizeof(double) * static_cast<std::size_t>(m.size()));
}

inline std::string hex_key(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

inline std::optional<std::filesystem::path> cache_dir() {
    const char* dir = std::getenv("GLCT_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::filesystem::path(dir);
}

// ---------------------------------------------------------------------------
// Binary (de)serialization helpers for the disk layer. The format is an
// internal cache detail, not a public interface.
// ---------------------------------------------------------------------------

inline void write_bytes(std::ofstream& out, const void* data, std::size_t len) {
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
}

inline bool read_bytes(std::ifstream& in, void* data, std::size_t len) {
    in.read(static_cast<char*>(data), static_cast<std::streamsize>(len));
    return static_cast<bool>(in);
}

inline void write_basis(std::ofstream& out, const EigenBasis& basis) {
    const std::int64_t n = basis.n();
    const std::uint8_t kind = basis.source_kind == EigenBasis::SourceKind::SelfAdjoint ? 0 : 1;
    write_bytes(out, &n, sizeof(n));
    write_bytes(out, &kind, sizeof(kind));
    write_bytes(out, basis.eigenvalues.data(), sizeof(Complex) * static_cast<std::size_t>(n));
    write_bytes(out, basis.eigenvectors.data(), sizeof(Complex) * static_cast<std::size_t>(n * n));
}

inline bool read_basis(std::ifstream& in, EigenBasis& basis) {
    std::int64_t n = 0;
    std::uint8_t kind = 0;
    if (!read_bytes(in, &n, sizeof(n)) || !read_bytes(in, &kind, sizeof(kind))) return false;
    if (n < 0 || n > (1 << 20)) return false;
    basis.eigenvalues.resize(n);
    basis.eigenvectors.resize(n, n);
    basis.source_kind =
        kind == 0 ? EigenBasis::SourceKind::SelfAdjoint : EigenBasis::SourceKind::GeneralNormal;
    return read_bytes(in, basis.eigenvalues.data(), sizeof(Complex) * static_cast<std::size_t>(n)) &&
           read_bytes(in, basis.eigenvectors.data(),
                      sizeof(Complex) * static_cast<std::size_t>(n * n));
}

inline std::uint64_t unique_tmp_token() {
    static std::atomic<std::uint64_t> counter{0};
    const auto now = std::chrono::steady_clock::now().time_since_epoch().count();
    return static_cast<std::uint64_t>(now) ^ (counter.fetch_add(1) << 48);
}

/// Writes a cache file atomically: temp file in the same directory, then rename.
template <typename WriteFn>
void atomic_write_file(const std::filesystem::path& path, WriteFn&& write_fn) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    const std::filesystem::path tmp = path.string() + ".tmp" + hex_key(unique_tmp_token());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        write_fn(out);
        if (!out) {
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

inline constexpr char kEigMagic[8] = {'G', 'L', 'C', 'T', 'E', 'G', '1', '\n'};
inline constexpr char kOpMagic[8] = {'G', 'L', 'C', 'T', 'O', 'P', '1', '\n'};

inline std::optional<EigenBasis> load_basis_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    char magic[8];
    if (!read_bytes(in, magic, sizeof(magic)) || std::memcmp(magic, kEigMagic, 8) != 0)
        return std::nullopt;
    EigenBasis basis;
    if (!read_basis(in, basis)) return std::nullopt;
    return basis;
}

inline void store_basis_file(const std::filesystem::path& path, const EigenBasis& basis) {
    atomic_write_file(path, [&](std::ofstream& out) {
        write_bytes(out, kEigMagic, sizeof(kEigMagic));
        write_basis(out, basis);
    });
}

inline std::optional<Eigen::MatrixXcd> load_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    char magic[8];
    if (!read_bytes(in, magic, sizeof(magic)) || std::memcmp(magic, kOpMagic, 8) != 0)
        return std::nullopt;
    std::int64_t rows = 0, cols = 0;
    if (!read_bytes(in, &rows, sizeof(rows)) || !read_bytes(in, &cols, sizeof(cols)))
        return std::nullopt;
    if (rows < 0 || cols < 0 || rows > (1 << 20) || cols > (1 << 20)) return std::nullopt;
    Eigen::MatrixXcd m(rows, cols);
    if (!read_bytes(in, m.data(), sizeof(Complex) * static_cast<std::size_t>(m.size())))
        return std::nullopt;
    return m;
}

inline void store_matrix_file(const std::filesystem::path& path, const Eigen::MatrixXcd& m) {
    atomic_write_file(path, [&](std::ofstream& out) {
        write_bytes(out, kOpMagic, sizeof(kOpMagic));
        const std::int64_t rows = m.rows(), cols = m.cols();
        write_bytes(out, &rows, sizeof(rows));
        write_bytes(out, &cols, sizeof(cols));
        write_bytes(out, m.data(), sizeof(Complex) * static_cast<std::size_t>(m.size()));
    });
}

// ---------------------------------------------------------------------------
// In-memory caches. Eigendecompositions are keyed by the digest of the
// max-abs-normalized input matrix, so positively scaled copies of one matrix
// share an entry whenever the scale divides out exactly. Operator matrices
// are keyed by a digest of (adjacency bytes, params, options).
// ---------------------------------------------------------------------------

template <typename Value>
class DigestCache {
  public:
    std::shared_ptr<const Value> find(std::uint64_t key) const {
        std::shared_lock lock(mutex_);
        const auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : it->second;
    }

    std::shared_ptr<const Value> insert(std::uint64_t key, std::shared_ptr<const Value> value) {
        std::unique_lock lock(mutex_);
        entries_[key] = value;
        return value;
    }

  private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::uint64_t, std::shared_ptr<const Value>> entries_;
};

inline DigestCache<EigenBasis>& normalized_eig_cache() {
    static DigestCache<EigenBasis> cache;
    return cache;
}

inline DigestCache<Eigen::MatrixXcd>& operator_matrix_cache() {
    static DigestCache<Eigen::MatrixXcd> cache;
    return cache;
}

/// Operators above this size are not kept in process memory (the disk layer,
/// if configured, still holds them); keeps long sweeps inside the memory
/// budget.
inline constexpr Eigen::Index kMemoryOpCacheMaxN = 512;

}  // namespace glct::detail
