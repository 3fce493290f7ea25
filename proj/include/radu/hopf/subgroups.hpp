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

#ifndef RADU_HOPF_SUBGROUPS_HPP
#define RADU_HOPF_SUBGROUPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "radu/hopf/algebra.hpp"

namespace radu {

/// Outcome of the subgroup-ideal test. `failed` is one of
/// ideal, counit, comultiplication, antipode; `witness` lies in I.
struct SubgroupIdealReport {
    bool ok = true;
    std::string failed;
    std::optional<Vec> witness;
    std::string detail;
};

/// I is a Hopf ideal: two-sided ideal, counit vanishes, Delta(I) in A(x)I + I(x)A, S(I) in I.
SubgroupIdealReport is_subgroup_ideal(const HopfAlgebra& a, const Subspace& ideal);

/// Subspace A(x)J + J(x)A of the tensor square.
Subspace tensor_ideal(const AssociativeAlgebra& a, const Subspace& j);

struct TensorIdentityReport {
    bool equal = true;
    Subspace lhs;  // A(x)I + I(x)A with I the intersection
    Subspace rhs;  // intersection of A(x)I_i + I_i(x)A
    std::optional<Vec> witness;  // element of rhs outside lhs
};

TensorIdentityReport tensor_intersection_identity(const AssociativeAlgebra& a, const std::vector<Subspace>& ideals);

struct UnionResult {
    Subspace ideal;
    SubgroupIdealReport check;
    bool directed = true;
};

/**
 * Ideal of the schematic union of the subgroups cut out by `ideals`: their
 * intersection. The family must be directed: for each pair there is a member
 * contained in both ideals (a common larger subgroup). Otherwise throws
 * NonDirectedFamily naming the pair, unless `force` is set.
 */
UnionResult schematic_union(const HopfAlgebra& a, const std::vector<Subspace>& ideals, bool force = false);

/// Conjugation coaction c(a) = a_(1) S(a_(3)) (x) a_(2) on coordinates i*d+j.
Vec conjugation_coaction(const HopfAlgebra& a, const Vec& x);

/**
 * Normality of the subgroup cut out by I: c(I) lies in A(x)I, i.e. the
 * subgroup is stable under conjugation. With `both_sides` the mirrored
 * coaction a_(2) (x) S(a_(1)) a_(3) is also required to land in I(x)A.
 * Throws UnsupportedKind when A is not commutative.
 */
bool is_normal(const HopfAlgebra& a, const Subspace& ideal, bool both_sides = false);

/// Ideal of the r-th Frobenius kernel: generated by p^r-th powers of the augmentation ideal.
Subspace frobenius_kernel(const HopfAlgebra& a, unsigned r);

}  // namespace radu

#endif
