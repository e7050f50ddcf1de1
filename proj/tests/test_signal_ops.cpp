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
 * @file test_signal_ops.cpp
 * @brief Spectral-domain convolution and translation built on the GLCT.
 *****************************************************************************/
#include <catch2/catch_amalgamated.hpp>

#include "glct/glct.hpp"

using glct::Complex;

namespace {

double vdiff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    return glct::max_abs(Eigen::VectorXcd(a - b));
}

}  // namespace

TEST_CASE("delta is the unit impulse", "[signal-ops]") {
    const glct::GraphSignal d = glct::delta(2, 4);
    REQUIRE(d.values(0) == Complex(0.0, 0.0));
    REQUIRE(d.values(2) == Complex(1.0, 0.0));
    REQUIRE(d.n() == 4);
    REQUIRE_THROWS_AS(glct::delta(4, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(glct::delta(-1, 4), std::invalid_argument);
}

TEST_CASE("convolution satisfies the product theorem", "[signal-ops]") {
    glct::Rng rng(83);
    const glct::Graph g = glct::erdos_renyi_graph(12, 0.4, rng);
    const glct::GraphSignal f = glct::random_signal(12, rng);
    const glct::GraphSignal h = glct::random_signal(12, rng);
    for (int i = 0; i < 3; ++i) {
        const glct::LctParams p = glct::random_params(rng);
        const glct::GraphSignal conv = glct::glct_convolve(g, f, h, p);
        const Eigen::VectorXcd lhs = glct::glct(g, conv, p).values;
        const Eigen::VectorXcd rhs =
            glct::glct(g, f, p).values.cwiseProduct(glct::glct(g, h, p).values);
        REQUIRE(vdiff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("convolution is commutative", "[signal-ops]") {
    glct::Rng rng(89);
    const glct::Graph g = glct::path_graph(10);
    const glct::GraphSignal f = glct::random_signal(10, rng);
    const glct::GraphSignal h = glct::random_signal(10, rng);
    const glct::LctParams p = glct::random_params(rng);
    REQUIRE(vdiff(glct::glct_convolve(g, f, h, p).values,
                  glct::glct_convolve(g, h, f, p).values) < 1e-14);
}

TEST_CASE("the spectral all-ones signal is the convolution identity", "[signal-ops]") {
    glct::Rng rng(97);
    const glct::Graph g = glct::erdos_renyi_graph(10, 0.5, rng);
    const glct::LctParams p = glct::random_params(rng);
    // h with GLCT(h) = 1 everywhere leaves any f unchanged under convolution.
    const glct::GraphSignal ones{Eigen::VectorXcd::Ones(10)};
    const glct::GraphSignal h = glct::iglct(g, ones, p);
    const glct::GraphSignal f = glct::random_signal(10, rng);
    REQUIRE(vdiff(glct::glct_convolve(g, f, h, p).values, f.values) < 1e-12);
}

TEST_CASE("convolution validates signal lengths", "[signal-ops]") {
    const glct::Graph g = glct::path_graph(6);
    const glct::GraphSignal ok = glct::bipolar_rect_signal(6);
    const glct::GraphSignal bad = glct::bipolar_rect_signal(5);
    REQUIRE_THROWS_AS(glct::glct_convolve(g, ok, bad, glct::identity_params()),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(glct::glct_convolve(g, bad, ok, glct::identity_params()),
                      std::invalid_argument);
}

TEST_CASE("translation multiplies the spectrum by the operator column", "[signal-ops]") {
    glct::Rng rng(101);
    const glct::Graph g = glct::erdos_renyi_graph(14, 0.4, rng);
    const glct::GraphSignal f = glct::random_signal(14, rng);
    for (const Eigen::Index vertex : {Eigen::Index{0}, Eigen::Index{7}, Eigen::Index{13}}) {
        const glct::LctParams p = glct::random_params(rng);
        const glct::GlctOperator op = glct::glct_operator(g, p);
        const glct::GraphSignal shifted = glct::translate(g, f, vertex, p);
        const Eigen::VectorXcd lhs = glct::glct(g, shifted, p).values;
        const Eigen::VectorXcd rhs =
            std::sqrt(14.0) *
            glct::glct(g, f, p).values.cwiseProduct(op.matrix.col(vertex));
        REQUIRE(vdiff(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("translation validates the vertex index", "[signal-ops]") {
    const glct::Graph g = glct::path_graph(6);
    const glct::GraphSignal f = glct::bipolar_rect_signal(6);
    REQUIRE_THROWS_AS(glct::translate(g, f, 6, glct::identity_params()), std::invalid_argument);
    REQUIRE_THROWS_AS(glct::translate(g, f, -1, glct::identity_params()), std::invalid_argument);
}
