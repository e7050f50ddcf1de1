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
 * @file graph.hpp
 * @brief Graph and graph-signal data model, generators, shift and scaling.
 *****************************************************************************/
#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "glct/linalg.hpp"

namespace glct {

/// Planar coordinates per vertex, used only by plot export.
using VertexCoords = std::vector<std::array<double, 2>>;

/**
 * Weighted graph with dense adjacency storage. Undirected graphs must have an
 * exactly symmetric adjacency matrix; this is enforced at construction.
 * Immutable by convention after construction.
 */
struct Graph {
    Eigen::MatrixXd adjacency;
    bool directed = false;
    std::optional<VertexCoords> coords;

    Graph() = default;

    Graph(Eigen::MatrixXd adj, bool is_directed, std::optional<VertexCoords> xy = std::nullopt)
        : adjacency(std::move(adj)), directed(is_directed), coords(std::move(xy)) {
        if (adjacency.rows() != adjacency.cols())
            throw std::invalid_argument("Graph: adjacency matrix must be square");
        if (adjacency.size() > 0 && !adjacency.allFinite())
            throw std::invalid_argument("Graph: adjacency matrix has non-finite entries");
        if (!directed && adjacency != adjacency.transpose())
            throw std::invalid_argument(
                "Graph: undirected graph requires an exactly symmetric adjacency matrix");
        if (coords && static_cast<Eigen::Index>(coords->size()) != adjacency.rows())
            throw std::invalid_argument("Graph: coordinate list length must equal vertex count");
    }

    Eigen::Index n() const { return adjacency.rows(); }
};

/// Complex-valued signal indexed by the vertices of a graph.
struct GraphSignal {
    Eigen::VectorXcd values;

    GraphSignal() = default;
    explicit GraphSignal(Eigen::VectorXcd v) : values(std::move(v)) {}

    Eigen::Index n() const { return values.size(); }
};

/**
 * Directed circulant shift graph: adjacency(r, m) = 1 iff r - m = 1 (mod n).
 * This is the graph representation of a length-n periodic time series.
 */
inline Graph cycle_graph(Eigen::Index n) {
    if (n < 2) throw std::invalid_argument("cycle_graph: need n >= 2");
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r) adj(r, (r + n - 1) % n) = 1.0;
    return Graph(std::move(adj), /*is_directed=*/true);
}

/// Undirected path with unit edge weights.
inline Graph path_graph(Eigen::Index n) {
    if (n < 2) throw std::invalid_argument("path_graph: need n >= 2");
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        adj(i, i + 1) = 1.0;
        adj(i + 1, i) = 1.0;
    }
    return Graph(std::move(adj), /*is_directed=*/false);
}

/// Graph shift A * s, summing each vertex's in-neighborhood.
inline GraphSignal graph_shift(const Graph& g, const GraphSignal& s) {
    if (g.n() != s.n()) {
        std::ostringstream msg;
        msg << "graph_shift: signal length " << s.n() << " does not match vertex count " << g.n();
        throw std::invalid_argument(msg.str());
    }
    Eigen::VectorXcd out(g.n());
    out.real() = g.adjacency * s.values.real();
    out.imag() = g.adjacency * s.values.imag();
    return GraphSignal(std::move(out));
}

/// Graph with adjacency (1/sigma) * A and unchanged structure flags.
inline Graph scaled_adjacency(const Graph& g, double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("scaled_adjacency: scaling parameter sigma must be positive");
    return Graph(g.adjacency / sigma, g.directed, g.coords);
}

}  // namespace glct
