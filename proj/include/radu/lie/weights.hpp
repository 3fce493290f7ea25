/*
   Copyright 2026 The radu Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RADU_LIE_WEIGHTS_HPP
#define RADU_LIE_WEIGHTS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "radu/lie/algebra.hpp"
#include "radu/univariate.hpp"

namespace radu {

/// g = sum of ker(ad h - c) over c in F_p, for a basis element h with ad(h)^p = ad(h) != 0.
struct WeightDecomposition {
    std::size_t h_index = 0;
    std::vector<std::pair<std::uint32_t, Subspace>> spaces;  // nonzero weight spaces, by weight

    const Subspace* space(std::uint32_t weight) const;
};

std::optional<WeightDecomposition> split_weight_decomposition(const RestrictedLieAlgebra& g);

/**
 * For the line family v(s) = a + s b, evaluates `constraints(v(s))` over the
 * one-variable coordinate ring k[s] and returns the monic gcd of every
 * coordinate. nullopt when all constraints vanish identically.
 */
std::optional<UPoly> line_constraint_gcd(const RestrictedLieAlgebra& g, const Vec& a, const Vec& b,
                                         const std::function<std::vector<Vec>(const Vec&)>& constraints);

/// Polynomial ring k[s] with an indeterminate name not used by k.
const Field& auxiliary_ring(const Field& k);

/// Coordinates of u ^ w (all 2x2 minors), for testing proportionality.
Vec wedge(const Vec& u, const Vec& w);

}  // namespace radu

#endif
