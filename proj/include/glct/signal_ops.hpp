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
 * @file signal_ops.hpp
 * @brief GLCT-domain convolution, delta signals, and translation operators.
 *****************************************************************************/
#pragma once

#include <cmath>
#include <stdexcept>

#include "glct/graph.hpp"
#include "glct/params.hpp"
#include "glct/transforms.hpp"

namespace glct {

/// Unit impulse at vertex i on an n-vertex graph.
inline GraphSignal delta(Eigen::Index i, Eigen::Index n) {
    if (n < 1) throw std::invalid_argument("delta: n must be >= 1");
    if (i < 0 || i >= n) {
        std::ostringstream msg;
        msg << "delta: vertex index " << i << " out of range [0, " << n << ")";
        throw std::invalid_argument(msg.str());
    }
    GraphSignal s{Eigen::VectorXcd::Zero(n)};
    s.values(i) = 1.0;
    return s;
}

/// GLCT-domain convolution: f * h = IGLCT(GLCT(f) .* GLCT(h)), with the
/// entrywise product taken in the transform domain.
inline GraphSignal glct_convolve(const Graph& g, const GraphSignal& f, const GraphSignal& h,
                                 const LctParams& p, const GlctOptions& options = {}) {
    const GraphSignal f_hat = glct(g, f, p, options);
    const GraphSignal h_hat = glct(g, h, p, options);
    return iglct(g, GraphSignal{f_hat.values.cwiseProduct(h_hat.values)}, p, options);
}

/// Translation to vertex i: T_i f = sqrt(N) IGLCT(GLCT(f) .* L_i), where L_i
/// is column i of the operator matrix (the GLCT of the delta at i).
inline GraphSignal translate(const Graph& g, const GraphSignal& f, Eigen::Index i,
                             const LctParams& p, const GlctOptions& options = {}) {
    const GlctOperator op = glct_operator(g, p, options);
    if (i < 0 || i >= op.n()) {
        std::ostringstream msg;
        msg << "translate: vertex index " << i << " out of range [0, " << op.n() << ")";
        throw std::invalid_argument(msg.str());
    }
    detail::require_signal_size(f, op.n(), "translate");
    const Eigen::VectorXcd f_hat = op.matrix * f.values;
    const Eigen::VectorXcd scaled = std::sqrt(static_cast<double>(op.n())) *
                                    f_hat.cwiseProduct(op.matrix.col(i));
    return iglct(g, GraphSignal{scaled}, p, options);
}

}  // namespace glct
