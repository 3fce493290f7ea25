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

#ifndef RADU_GALLERY_CATALOG_HPP
#define RADU_GALLERY_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "radu/gallery/lie.hpp"
#include "radu/hopf/algebra.hpp"

namespace radu::gallery {

/**
 * Named objects.
 *
 * Lie algebras: `G-imperfect@p=P` (a = t over F_P(t)), `sl2-kernel@p=2`,
 * `alpha@P`, `mu@P`, `torus@P^N`, `product(A,B)` (direct sum).
 *
 * Hopf algebras: `alpha@P` or `alpha@P^R` (k[x]/(x^{P^R})), `mu@P`,
 * `alpha2`, `alpha4`, `mu2`, `product(A,B)` (tensor product), and
 * `dual-u(L)` for the coordinate ring of the height-one group of a Lie
 * algebra L from the list above.
 *
 * Unknown names yield nullopt; malformed parameters throw std::invalid_argument.
 */
std::optional<AlgebraWithRep> lie_by_name(const std::string& name);
std::optional<HopfAlgebra> hopf_by_name(const std::string& name, std::size_t cap = 128);

/// Splits `head(a,b)` into {a, b} at top-level commas; nullopt if `name` is not of that form.
std::optional<std::vector<std::string>> call_arguments(const std::string& name, const std::string& head);

}  // namespace radu::gallery

#endif
