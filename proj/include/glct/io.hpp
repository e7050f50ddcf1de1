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
 * @file io.hpp
 * @brief File formats: edge-list CSV and dense CSV graphs, signal CSV, and
 *        vertex-coordinate CSV. All numeric output uses 17 significant
 *        digits so round trips are bit-faithful at double precision.
 *****************************************************************************/
#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glct/graph.hpp"

namespace glct {

/// File access or parse failure; maps to the I/O exit code in the CLI.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GraphFileFormat { EdgeListCsv, DenseCsv };

/// Shortest decimal form that round-trips a double (17 significant digits).
inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

namespace detail {

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

inline double parse_double(std::string_view field, const std::string& context) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw IoError("cannot parse number '" + std::string(field) + "' in " + context);
    return value;
}

inline long parse_index(std::string_view field, const std::string& context) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw IoError("cannot parse index '" + std::string(field) + "' in " + context);
    return value;
}

}  // namespace detail

/**
 * Loads a graph from disk.
 *
 * Edge-list CSV: header line `# n=<N> directed=<true|false>` (directed
 * defaults to false when omitted), then `src,dst,weight` rows with 0-based
 * indices. Undirected input writes both (src,dst) and (dst,src); writing any
 * adjacency cell twice is a duplicate-edge error, so listing both
 * orientations of an undirected edge is rejected rather than silently
 * merged.
 *
 * Dense CSV: N rows of N comma-separated reals; directedness is inferred
 * from symmetry.
 */
inline Graph load_graph(const std::string& path, GraphFileFormat format) {
    const std::vector<std::string> lines = detail::read_lines(path);

    if (format == GraphFileFormat::DenseCsv) {
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const std::string_view line = detail::trim(lines[i]);
            if (line.empty()) continue;
            std::vector<double> row;
            for (const auto field : detail::split_csv(line))
                row.push_back(detail::parse_double(field, path + " line " + std::to_string(i + 1)));
            rows.push_back(std::move(row));
        }
        const auto n = static_cast<Eigen::Index>(rows.size());
        if (n == 0) throw IoError("dense CSV has no rows: " + path);
        Eigen::MatrixXd adjacency(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
            if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(r)].size()) != n)
                throw IoError("dense CSV is not square: " + path);
            for (Eigen::Index c = 0; c < n; ++c)
                adjacency(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
        const bool directed = adjacency != adjacency.transpose();
        return Graph(adjacency, directed);
    }

    // Edge-list CSV.
    std::size_t header_index = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!detail::trim(lines[i]).empty()) {
            header_index = i;
            break;
        }
    }
    if (header_index == lines.size() || detail::trim(lines[header_index]).front() != '#')
        throw IoError("edge-list CSV must start with a '# n=<N> directed=<true|false>' header: " +
                      path);

    long n = -1;
    bool directed = false;
    {
        std::istringstream header(std::string(detail::trim(lines[header_index]).substr(1)));
        std::string token;
        while (header >> token) {
            if (token.rfind("n=", 0) == 0) {
                n = detail::parse_index(std::string_view(token).substr(2), "header of " + path);
            } else if (token.rfind("directed=", 0) == 0) {
                const std::string_view value = std::string_view(token).substr(9);
                if (value == "true")
                    directed = true;
                else if (value == "false")
                    directed = false;
                else
                    throw IoError("header directed= must be true or false: " + path);
            } else {
                throw IoError("unrecognized header token '" + token + "' in " + path);
            }
        }
    }
    if (n < 1) throw IoError("edge-list header must declare n >= 1: " + path);

    Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
    std::set<std::pair<long, long>> written;
    for (std::size_t i = header_index + 1; i < lines.size(); ++i) {
        const std::string_view line = detail::trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;
        const std::string context = path + " line " + std::to_string(i + 1);
        const auto fields = detail::split_csv(line);
        if (fields.size() != 3)
            throw IoError("expected 'src,dst,weight' in " + context);
        const long src = detail::parse_index(fields[0], context);
        const long dst = detail::parse_index(fields[1], context);
        const double weight = detail::parse_double(fields[2], context);
        if (src < 0 || src >= n || dst < 0 || dst >= n) {
            std::ostringstream msg;
            msg << "vertex index out of range [0, " << n << ") in " << context;
            throw IoError(msg.str());
        }
        if (!written.insert({src, dst}).second)
            throw IoError("duplicate edge (" + std::to_string(src) + "," + std::to_string(dst) +
                          ") in " + context);
        adjacency(src, dst) = weight;
        if (!directed && src != dst) {
            if (!written.insert({dst, src}).second)
                throw IoError("duplicate edge (" + std::to_string(dst) + "," +
                              std::to_string(src) + ") in " + context);
            adjacency(dst, src) = weight;
        }
    }
    return Graph(adjacency, directed);
}

/// Writes a graph as edge-list CSV. Undirected graphs emit each edge once
/// (src <= dst), so the file reloads without duplicate-edge conflicts.
inline void save_graph_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << "# n=" << g.n() << " directed=" << (g.directed ? "true" : "false") << "\n";
    for (Eigen::Index r = 0; r < g.n(); ++r) {
        for (Eigen::Index c = 0; c < g.n(); ++c) {
            if (g.adjacency(r, c) == 0.0) continue;
            if (!g.directed && c < r) continue;
            out << r << "," << c << "," << format_double(g.adjacency(r, c)) << "\n";
        }
    }
    if (!out) throw IoError("write failed: " + path);
}

/// Loads a signal CSV: one `re,im` pair per line.
inline GraphSignal load_signal(const std::string& path) {
    const std::vector<std::string> lines = detail::read_lines(path);
    std::vector<Complex> values;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view line = detail::trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;
        const std::string context = path + " line " + std::to_string(i + 1);
        const auto fields = detail::split_csv(line);
        if (fields.size() != 2) throw IoError("expected 're,im' in " + context);
        values.emplace_back(detail::parse_double(fields[0], context),
                            detail::parse_double(fields[1], context));
    }
    if (values.empty()) throw IoError("signal CSV has no values: " + path);
    GraphSignal s{Eigen::VectorXcd(static_cast<Eigen::Index>(values.size()))};
    for (std::size_t i = 0; i < values.size(); ++i)
        s.values(static_cast<Eigen::Index>(i)) = values[i];
    return s;
}

/// Writes a signal CSV: one `re,im` pair per line, N lines.
inline void save_signal(const std::string& path, const GraphSignal& s) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open file for writing: " + path);
    for (Eigen::Index i = 0; i < s.values.size(); ++i)
        out << format_double(s.values(i).real()) << "," << format_double(s.values(i).imag())
            << "\n";
    if (!out) throw IoError("write failed: " + path);
}

/// Loads vertex coordinates: one `x,y` pair per line, N lines.
inline VertexCoords load_coords(const std::string& path) {
    const std::vector<std::string> lines = detail::read_lines(path);
    VertexCoords coords;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view line = detail::trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;
        const std::string context = path + " line " + std::to_string(i + 1);
        const auto fields = detail::split_csv(line);
        if (fields.size() != 2) throw IoError("expected 'x,y' in " + context);
        coords.push_back({detail::parse_double(fields[0], context),
                          detail::parse_double(fields[1], context)});
    }
    if (coords.empty()) throw IoError("coordinate CSV has no rows: " + path);
    return coords;
}

/// Writes vertex coordinates: one `x,y` pair per line.
inline void save_coords(const std::string& path, const VertexCoords& coords) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open file for writing: " + path);
    for (const auto& xy : coords)
        out << format_double(xy[0]) << "," << format_double(xy[1]) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace glct
