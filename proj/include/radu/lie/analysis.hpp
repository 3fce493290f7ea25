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

#ifndef RADU_LIE_ANALYSIS_HPP
#define RADU_LIE_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "radu/embedding.hpp"
#include "radu/lie/algebra.hpp"

namespace radu {

/// Three-valued answer; `undecided` is a real outcome, never an error.
enum class Tristate { no, yes, undecided };
std::string to_string(Tristate t);

/// Smallest p-ideal containing s.
Subspace spin_p_ideal(const RestrictedLieAlgebra& g, const Subspace& s);
/// Smallest restricted subalgebra containing s.
Subspace spin_subalgebra(const RestrictedLieAlgebra& g, const Subspace& s);

bool is_subalgebra(const RestrictedLieAlgebra& g, const Subspace& s);
bool is_restricted_subalgebra(const RestrictedLieAlgebra& g, const Subspace& s);
bool is_ideal(const RestrictedLieAlgebra& g, const Subspace& s);
bool is_p_ideal(const RestrictedLieAlgebra& g, const Subspace& s);
/// Bracket span [a, b].
Subspace commutator(const RestrictedLieAlgebra& g, const Subspace& a, const Subspace& b);

/// A subspace of an algebra with its closure flags, computed on construction.
class RSubspace {
   public:
    RSubspace(const RestrictedLieAlgebra& g, Subspace s);

    const Subspace& subspace() const noexcept { return s_; }
    bool is_subalgebra() const noexcept { return subalgebra_; }
    bool is_ideal() const noexcept { return ideal_; }
    bool is_p_ideal() const noexcept { return p_ideal_; }

   private:
    Subspace s_;
    bool subalgebra_, ideal_, p_ideal_;
};

struct CharacteristicSeries {
    Subspace center;
    std::vector<Subspace> derived;        // g, [g,g], ... until it stabilizes
    std::vector<Subspace> lower_central;  // g, [g,g], [g,[g,g]], ... until it stabilizes
    bool solvable = false;
    bool nilpotent = false;
    std::size_t nilpotency_class = 0;  // meaningful when nilpotent
};

Subspace center(const RestrictedLieAlgebra& g);
CharacteristicSeries characteristic_series(const RestrictedLieAlgebra& g);

/// Iterates the p-operation dim(g) times. Field coefficients only.
bool is_p_nilpotent(const RestrictedLieAlgebra& g, const Vec& x);

/// Chain S, [S,S] + span(S^[p]), ... reaches 0. Throws NotAPIdeal unless s is a restricted subalgebra.
bool is_unipotent(const RestrictedLieAlgebra& g, const Subspace& s);

struct GenericPPower {
    const Field* ring;               // coordinate ring over the algebra's field
    std::vector<std::string> vars;  // one indeterminate per basis element
    Vec value;                      // (sum x_i e_i)^[p]
};
GenericPPower generic_p_power(const RestrictedLieAlgebra& g);

struct LieQuotient {
    RestrictedLieAlgebra algebra;
    QuotientData data;  // projection onto / section from the complement coordinates
};
/// g / i on the non-pivot basis of i. Throws NotAPIdeal naming the violated containment.
LieQuotient quotient(const RestrictedLieAlgebra& g, const Subspace& i);

/// A restricted subalgebra as an algebra on its echelon basis.
struct LieSubalgebra {
    RestrictedLieAlgebra algebra;
    Matrix inclusion;  // dim(g) x dim(s), columns are the echelon basis
};
LieSubalgebra subalgebra(const RestrictedLieAlgebra& g, const Subspace& s);

struct SeriesStep {
    std::size_t quotient_dim = 0;
    enum class Kind { alpha, mu, unclassified } kind = Kind::unclassified;
    std::optional<Scalar> scalar;  // c with v^[p] = c v in the 1-dimensional quotient
    std::string describe() const;
};
/// Each term must be a p-ideal of the next; the chain runs from 0 to g.
std::vector<SeriesStep> verify_subnormal_series(const RestrictedLieAlgebra& g, const std::vector<Subspace>& chain);

/// All 1-dimensional p-ideals; nullopt when the search is not complete for this input.
std::optional<std::vector<Subspace>> one_dim_p_ideals(const RestrictedLieAlgebra& g);

/// Abelian with invertible p-matrix. The zero algebra qualifies.
bool is_mult_type(const RestrictedLieAlgebra& g);

RestrictedLieAlgebra base_change(const RestrictedLieAlgebra& g, const FieldEmbedding& e);
Subspace base_change(const Subspace& s, const FieldEmbedding& e);

/// Projective points of F_q^n with first nonzero coordinate 1, in a fixed order.
std::vector<Vec> projective_points(const Field& f, std::size_t n);

}  // namespace radu

#endif
