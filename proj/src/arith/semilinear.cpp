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

#include "radu/semilinear.hpp"

#include "radu/errors.hpp"

namespace radu {

SemilinearMap::SemilinearMap(Matrix b) : b_(std::move(b)) {
    if (b_.rows() != b_.cols()) throw DimensionMismatch("semilinear map needs a square matrix");
}

Vec SemilinearMap::operator()(const Vec& v) const { return b_.apply(frobenius(v)); }

Matrix SemilinearMap::iterate_matrix(std::size_t m) const {
    Matrix r = Matrix::identity(field(), dim());
    for (std::size_t i = 0; i < m; ++i) r = b_ * r.frobenius_twist();
    return r;
}

Subspace semilinear_kernel(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t n = m.cols();
    if (m.rows() == 0 || m.is_zero()) return Subspace::whole(f, n);
    if (f.is_perfect()) {
        std::vector<Vec> basis;
        for (const auto& w : nullspace(m)) {
            Vec v;
            v.reserve(n);
            for (const auto& x : w) v.push_back(*pth_root(x));
            basis.push_back(std::move(v));
        }
        return Subspace::span(f, n, basis);
    }
    if (f.kind() != FieldKind::rational_function)
        throw UnsupportedKind("semilinear kernel over " + f.name());
    // Each entry is sum_j t^j g_j^p; the t^j are independent over k^p, so the
    // condition splits into p linear systems in the g_j.
    const std::uint32_t p = f.characteristic();
    Matrix stacked(f, m.rows() * p, n);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < n; ++c) {
            if (m.at(i, c).is_zero()) continue;
            const auto comps = frobenius_components(m.at(i, c));
            for (std::uint32_t j = 0; j < p; ++j) stacked.at(j * m.rows() + i, c) = comps[j];
        }
    return Subspace::span(f, n, nullspace(stacked));
}

Subspace preimage(const SemilinearMap& phi, const Subspace& w) {
    const Subspace ann = w.annihilator();
    if (ann.is_zero()) return Subspace::whole(phi.field(), phi.dim());
    return semilinear_kernel(Matrix::from_rows(phi.field(), phi.dim(), ann.basis()) * phi.matrix());
}

Subspace rational_unipotent_part(const SemilinearMap& phi) {
    Subspace k(phi.field(), phi.dim());
    for (std::size_t i = 0; i <= phi.dim(); ++i) {
        Subspace next = preimage(phi, k);
        if (next == k) break;
        k = std::move(next);
    }
    return k;
}

std::vector<std::size_t> rank_sequence(const SemilinearMap& phi) {
    std::vector<std::size_t> ranks;
    Matrix m = phi.matrix();
    for (std::size_t step = 0; step <= phi.dim() + 1; ++step) {
        ranks.push_back(rank(m));
        if (ranks.size() >= 2 && ranks[ranks.size() - 1] == ranks[ranks.size() - 2]) break;
        m = phi.matrix() * m.frobenius_twist();
    }
    return ranks;
}

std::size_t stable_rank(const SemilinearMap& phi) {
    if (phi.dim() == 0) return 0;
    return rank_sequence(phi).back();
}

}  // namespace radu
