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

#ifndef RADU_GALLERY_HOPF_HPP
#define RADU_GALLERY_HOPF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "radu/hopf/algebra.hpp"

namespace radu::gallery {

/// k[x]/(x^{p^r}) with x primitive; basis one, x, x2, ...
HopfAlgebra alpha_hopf(const Field& f, unsigned r = 1);
/// k[g]/(g^n - 1) with g grouplike; n defaults to the characteristic.
HopfAlgebra mu_hopf(const Field& f, std::uint32_t n = 0);

/// k[x]/(x^n) as an associative algebra.
AssociativeAlgebra truncated_polynomial(const Field& f, std::size_t n, const std::string& var = "x");
/// k[x_1..x_m]/(x_1..x_m)^2; basis one, x_1, ..., x_m.
AssociativeAlgebra square_zero(const Field& f, const std::vector<std::string>& vars);

}  // namespace radu::gallery

#endif
