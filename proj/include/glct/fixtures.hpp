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
 * @file fixtures.hpp
 * @brief Seed-deterministic random fixtures: graphs, signals, and parameter
 *        draws for tests and the verification command.
 *****************************************************************************/
#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>

#include "glct/graph.hpp"
#include "glct/params.hpp"

namespace glct {

/// Deterministic uniform source. mt19937_64 output is pinned by the
/// standard; the 53-bit mantissa mapping keeps draws identical across
/// platforms, unlike std::uniform_real_distribution.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in [0, 1).
    double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  private:
    std::mt19937_64 engine_;
};

/// Undirected Erdos-Renyi style fixture: each pair (i, j), i < j, gets an
/// edge with the given probability, weighted uniformly in [0.5, 1.5) to keep
/// spectra generically simple.
inline Graph erdos_renyi_graph(Eigen::Index n, double edge_probability, Rng& rng) {
    if (n < 2) throw std::invalid_argument("erdos_renyi_graph: n must be >= 2");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw std::invalid_argument("erdos_renyi_graph: edge probability must be in [0, 1]");
    Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            // Both values are always drawn so the stream stays aligned
            // whatever the edge outcome.
            const double draw = rng.u01();
            const double weight = rng.uniform(0.5, 1.5);
            if (draw < edge_probability) {
                adjacency(i, j) = weight;
                adjacency(j, i) = weight;
            }
        }
    }
    return Graph(adjacency, false);
}

/// Undirected random geometric graph on the unit square: vertices connect
/// when within the given radius, unit weights, coordinates attached. A
/// planar-ish stand-in for road-network fixtures.
inline Graph geometric_graph(Eigen::Index n, double radius, Rng& rng) {
    if (n < 2) throw std::invalid_argument("geometric_graph: n must be >= 2");
    if (radius <= 0.0) throw std::invalid_argument("geometric_graph: radius must be positive");
    VertexCoords coords(static_cast<std::size_t>(n));
    for (auto& xy : coords) {
        xy[0] = rng.u01();
        xy[1] = rng.u01();
    }
    Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
    const double r2 = radius * radius;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double dx = coords[static_cast<std::size_t>(i)][0] -
                              coords[static_cast<std::size_t>(j)][0];
            const double dy = coords[static_cast<std::size_t>(i)][1] -
                              coords[static_cast<std::size_t>(j)][1];
            if (dx * dx + dy * dy <= r2) {
                adjacency(i, j) = 1.0;
                adjacency(j, i) = 1.0;
            }
        }
    }
    return Graph(adjacency, false, coords);
}

/// Complex signal with real and imaginary parts uniform in [-1, 1).
inline GraphSignal random_signal(Eigen::Index n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_signal: n must be >= 1");
    GraphSignal s{Eigen::VectorXcd(n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        const double re = rng.uniform(-1.0, 1.0);
        const double im = rng.uniform(-1.0, 1.0);
        s.values(i) = Complex(re, im);
    }
    return s;
}

/// Bipolar rectangular signal: +1 on [window_begin, window_end), -1
/// elsewhere. Defaults to +1 on the first half.
inline GraphSignal bipolar_rect_signal(Eigen::Index n, Eigen::Index window_begin = 0,
                                       Eigen::Index window_end = -1) {
    if (n < 1) throw std::invalid_argument("bipolar_rect_signal: n must be >= 1");
    if (window_end < 0) window_end = n / 2;
    if (window_begin < 0 || window_begin > window_end || window_end > n)
        throw std::invalid_argument(
            "bipolar_rect_signal: window must satisfy 0 <= begin <= end <= n");
    GraphSignal s{Eigen::VectorXcd::Constant(n, Complex(-1.0, 0.0))};
    for (Eigen::Index i = window_begin; i < window_end; ++i) s.values(i) = 1.0;
    return s;
}

/// Random valid LCT parameters, drawn through the (xi, sigma, alpha)
/// decomposition so the determinant is 1 by construction: xi in [-1, 1),
/// sigma in [0.5, 2), alpha in [-pi, pi).
inline LctParams random_params(Rng& rng) {
    const double xi = rng.uniform(-1.0, 1.0);
    const double sigma = rng.uniform(0.5, 2.0);
    const double alpha = rng.uniform(-std::numbers::pi, std::numbers::pi);
    return params_from_decomposition(xi, sigma, alpha);
}

}  // namespace glct
