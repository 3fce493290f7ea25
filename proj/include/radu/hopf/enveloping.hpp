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

#ifndef RADU_HOPF_ENVELOPING_HPP
#define RADU_HOPF_ENVELOPING_HPP

#include <cstdint>
#include <vector>

#include "radu/hopf/algebra.hpp"
#include "radu/lie/algebra.hpp"

namespace radu {

/// u(g) on the PBW basis e^a = e_1^{a_1} ... e_n^{a_n}, 0 <= a_i < p.
struct RestrictedEnveloping {
    HopfAlgebra hopf;
    std::vector<std::vector<std::uint32_t>> monomials;  // index -> exponent vector

    std::size_t index_of(const std::vector<std::uint32_t>& exps) const;
    /// Image of a Lie algebra element in degree one.
    Vec embed(const Vec& lie_element) const;
};

/// Builds u(g) by rewriting; generators are primitive. Throws CapExceeded when p^dim(g) > cap.
RestrictedEnveloping restricted_enveloping_algebra(const RestrictedLieAlgebra& g, std::size_t cap = 128);

/// u(S) inside u(g): the unital subalgebra generated by S. Throws NotAPIdeal unless S is a restricted subalgebra.
Subspace enveloping_of(const RestrictedEnveloping& u, const RestrictedLieAlgebra& g, const Subspace& s);

/**
 * Ideal of the subgroup scheme G(S) in the coordinate ring dual(u(g)): the
 * annihilator of u(S) under the canonical pairing. When `verify` is set the
 * result is checked with is_subgroup_ideal against `coordinate_ring`.
 */
Subspace subgroup_ideal_from_p_subalgebra(const RestrictedEnveloping& u, const HopfAlgebra& coordinate_ring,
                                          const RestrictedLieAlgebra& g, const Subspace& s, bool verify = true);

}  // namespace radu

#endif
