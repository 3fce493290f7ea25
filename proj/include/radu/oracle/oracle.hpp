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

#ifndef RADU_ORACLE_ORACLE_HPP
#define RADU_ORACLE_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "radu/lie/algebra.hpp"

/**
 * Brute-force reference implementations over finite fields. Everything here
 * enumerates elements or subspaces and shares no code with the production
 * closure, radical, or p-power routines beyond exact arithmetic.
 */
namespace radu::oracle {

/// Every vector of F_q^n, zero first.
std::vector<Vec> all_vectors(const Field& f, std::size_t n);
/// Every element of a subspace.
std::vector<Vec> elements(const Subspace& s);
/// Every subspace of F_q^n, enumerated through reduced echelon forms.
std::vector<Subspace> all_subspaces(const Field& f, std::size_t n);

Vec bracket(const StructureConstants& sc, const Vec& x, const Vec& y);
/// x^[p] without the Jacobson formula: closed form in characteristic 2,
/// the p-th power inside the restricted enveloping algebra otherwise.
Vec p_power(const RestrictedLieAlgebra& g, const Vec& x);

bool is_p_nilpotent(const RestrictedLieAlgebra& g, const Vec& x);
bool is_restricted_subalgebra(const RestrictedLieAlgebra& g, const Subspace& s);
bool is_p_ideal(const RestrictedLieAlgebra& g, const Subspace& s);
bool is_unipotent(const RestrictedLieAlgebra& g, const Subspace& s);
/// Smallest p-ideal containing s, by element-wise saturation.
Subspace p_ideal_closure(const RestrictedLieAlgebra& g, const Subspace& s);

/// Largest unipotent p-ideal: the maximum over all subspaces. Throws
/// std::logic_error if the unipotent p-ideals have no largest member.
Subspace radical(const RestrictedLieAlgebra& g);
/// All unipotent restricted subalgebras.
std::vector<Subspace> unipotent_subalgebras(const RestrictedLieAlgebra& g);

/// Structural checks written independently of validate(): alternating, Jacobi on triples, ad(e_i^[p]) = ad(e_i)^p.
bool valid_restricted(const StructureConstants& sc);

/**
 * Every restricted Lie algebra structure on F_q^n from the grid of all bracket
 * tables and all p-power assignments, up to `cap` instances. When the grid
 * holds more than `cap`, instances are drawn round-robin across bracket tables
 * so every Lie structure is represented before any is repeated.
 */
std::vector<RestrictedLieAlgebra> enumerate_algebras(const Field& f, std::size_t n, std::size_t cap);

}  // namespace radu::oracle

#endif
