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

#ifndef RADU_GALLERY_LIE_HPP
#define RADU_GALLERY_LIE_HPP

#include <string>
#include <vector>

#include "radu/lie/algebra.hpp"

namespace radu::gallery {

struct AlgebraWithRep {
    RestrictedLieAlgebra algebra;
    std::vector<Matrix> representation;  // one p x p matrix per basis element
};

/**
 * The 3-dimensional algebra on X, Y, Z with [Z,Y] = Y, X^[p] = X, Y^[p] = aX,
 * Z^[p] = Z, together with its faithful p x p representation. Throws
 * std::invalid_argument when a is a p-th power in its field.
 */
AlgebraWithRep imperfect_G(std::uint32_t p, const Scalar& a);
/// a = t in F_p(t).
AlgebraWithRep imperfect_G(std::uint32_t p);

/// Lie algebra of the first Frobenius kernel of SL_2 in characteristic 2, basis e, h, f.
RestrictedLieAlgebra sl2_kernel_char2(const Field& f);
RestrictedLieAlgebra sl2_kernel_char2();

/// One-dimensional, v^[p] = 0.
RestrictedLieAlgebra alpha_lie(const Field& f, const std::string& label = "v");
/// One-dimensional, v^[p] = v.
RestrictedLieAlgebra mu_lie(const Field& f, const std::string& label = "v");
/// Abelian, e_i^[p] = e_i.
RestrictedLieAlgebra torus_lie(const Field& f, std::size_t n);
/// Direct sum; labels of b are suffixed when they clash with a.
RestrictedLieAlgebra direct_sum(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b);

struct RepReport {
    bool ok = true;
    std::string failed_check;  // count, shape, bracket, p-power, faithful
    std::string detail;
};

/// Checks rho([e_i,e_j]) = [rho e_i, rho e_j], rho(e_i^[p]) = rho(e_i)^p, and injectivity.
RepReport verify_restricted_rep(const RestrictedLieAlgebra& g, const std::vector<Matrix>& rho);

/// rho(x) = sum x_i rho(e_i).
Matrix represent(const std::vector<Matrix>& rho, const Vec& x);

}  // namespace radu::gallery

#endif
