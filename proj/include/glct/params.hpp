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
 * @file params.hpp
 * @brief LCT parameter matrices (a,b,c,d) and their chirp/scale/rotation
 *        decomposition (xi, sigma, alpha).
 *****************************************************************************/
#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace glct {

/**
 * Parameter matrix [[a, b], [c, d]] of a linear canonical transform.
 * Valid parameters satisfy a*d - b*c = 1 and (a, b) != (0, 0).
 */
struct LctParams {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 1.0;

    double determinant() const { return a * d - b * c; }
};

/// Chirp/scale/rotation split of an LctParams matrix.
struct DecomposedParams {
    double xi = 0.0;     ///< chirp-multiplication parameter
    double sigma = 1.0;  ///< scaling parameter, sqrt(a^2 + b^2) > 0
    double alpha = 0.0;  ///< rotation angle, atan2(b, a)
};

inline LctParams identity_params() { return LctParams{1.0, 0.0, 0.0, 1.0}; }

/// Rotation-only parameters (cos a, sin a, -sin a, cos a).
inline LctParams rotation_params(double alpha) {
    return LctParams{std::cos(alpha), std::sin(alpha), -std::sin(alpha), std::cos(alpha)};
}

/// Throws unless determinant and non-degeneracy constraints hold.
inline void validate_params(const LctParams& p, double det_tol = 1e-10) {
    const double det = p.determinant();
    if (!(std::abs(det - 1.0) <= det_tol)) {
        std::ostringstream msg;
        msg << "invalid LCT parameters: ad-bc must equal 1 (got " << det << ")";
        throw std::invalid_argument(msg.str());
    }
    if (p.a == 0.0 && p.b == 0.0)
        throw std::invalid_argument("invalid LCT parameters: (a, b) must not both be zero");
}

/**
 * Splits (a,b,c,d) into the chirp/scale/rotation parameters:
 *   xi = (ac + bd) / (a^2 + b^2),  sigma = sqrt(a^2 + b^2),  alpha = atan2(b, a).
 * atan2 resolves the arccos/arcsin pair into the unique angle consistent with
 * both, covering all four quadrants.
 */
inline DecomposedParams decompose_params(const LctParams& p) {
    validate_params(p);
    const double s2 = p.a * p.a + p.b * p.b;
    return DecomposedParams{(p.a * p.c + p.b * p.d) / s2, std::sqrt(s2), std::atan2(p.b, p.a)};
}

/**
 * Rebuilds (a,b,c,d) from a (xi, sigma, alpha) triple as the product
 * [[1,0],[xi,1]] [[sigma,0],[0,1/sigma]] [[cos a,sin a],[-sin a,cos a]];
 * the determinant is 1 by construction.
 */
inline LctParams params_from_decomposition(double xi, double sigma, double alpha) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("params_from_decomposition: sigma must be positive");
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    return LctParams{sigma * ca, sigma * sa, xi * sigma * ca - sa / sigma,
                     xi * sigma * sa + ca / sigma};
}

inline LctParams params_from_decomposition(const DecomposedParams& d) {
    return params_from_decomposition(d.xi, d.sigma, d.alpha);
}

/**
 * Parameter matrix of the composed transform: the 2x2 product M2 * M1.
 * Accumulated determinant drift beyond 1e-8 is rejected.
 */
inline LctParams compose_params(const LctParams& p2, const LctParams& p1) {
    validate_params(p1);
    validate_params(p2);
    // Adding +0.0 turns -0.0 products into +0.0 so decompose_params stays on
    // the principal atan2 branch (and reports print 0, not -0).
    const LctParams out{p2.a * p1.a + p2.b * p1.c + 0.0, p2.a * p1.b + p2.b * p1.d + 0.0,
                        p2.c * p1.a + p2.d * p1.c + 0.0, p2.c * p1.b + p2.d * p1.d + 0.0};
    if (std::abs(out.determinant() - 1.0) > 1e-8) {
        std::ostringstream msg;
        msg << "compose_params: composed determinant drifted to " << out.determinant();
        throw std::invalid_argument(msg.str());
    }
    return out;
}

/// Parameters of the inverse transform: (d, -b, -c, a).
inline LctParams inverse_params(const LctParams& p) {
    return LctParams{p.d, -p.b, -p.c, p.a};
}

}  // namespace glct
