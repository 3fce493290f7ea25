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

#ifndef RADU_SEMILINEAR_HPP
#define RADU_SEMILINEAR_HPP

#include <vector>

#include "radu/linalg.hpp"

namespace radu {

/// The p-twisted map v -> B * v^(p), with v^(p) the entrywise Frobenius.
class SemilinearMap {
   public:
    explicit SemilinearMap(Matrix b);

    const Matrix& matrix() const noexcept { return b_; }
    const Field& field() const noexcept { return b_.field(); }
    std::size_t dim() const noexcept { return b_.cols(); }

    Vec operator()(const Vec& v) const;
    /// Matrix of the m-fold composite: B * B^(p) * ... * B^(p^(m-1)).
    Matrix iterate_matrix(std::size_t m) const;

   private:
    Matrix b_;
};

/// {v : m * v^(p) = 0} over the base field. m may be rectangular.
Subspace semilinear_kernel(const Matrix& m);

/// {v : phi(v) in w}.
Subspace preimage(const SemilinearMap& phi, const Subspace& w);

/// Union of ker(phi^i), i = 1..n.
Subspace rational_unipotent_part(const SemilinearMap& phi);

/// Ranks of the m-fold composite matrices for m = 1, 2, ... until the first repeat.
std::vector<std::size_t> rank_sequence(const SemilinearMap& phi);

/// Eventual rank of phi^m; n minus the dimension of the geometric unipotent part.
std::size_t stable_rank(const SemilinearMap& phi);

}  // namespace radu

#endif
