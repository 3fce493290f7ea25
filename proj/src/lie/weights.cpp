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

#include "radu/lie/weights.hpp"

#include <algorithm>

namespace radu {

const Subspace* WeightDecomposition::space(std::uint32_t weight) const {
    for (const auto& [c, s] : spaces)
        if (c == weight) return &s;
    return nullptr;
}

std::optional<WeightDecomposition> split_weight_decomposition(const RestrictedLieAlgebra& g) {
    const Field& f = g.field();
    const std::uint32_t p = f.characteristic();
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& a = g.ad_basis(i);
        if (a.is_zero() || a.pow(p) != a) continue;
        WeightDecomposition w;
        w.h_index = i;
        for (std::uint32_t c = 0; c < p; ++c) {
            const Matrix shifted = a - Matrix::identity(f, n).scaled(f.from_int(c));
            Subspace s = Subspace::span(f, n, nullspace(shifted));
            if (!s.is_zero()) w.spaces.emplace_back(c, std::move(s));
        }
        return w;
    }
    return std::nullopt;
}

const Field& auxiliary_ring(const Field& k) {
    std::string name = "s";
    const auto& used = k.variables();
    for (int i = 0; std::find(used.begin(), used.end(), name) != used.end(); ++i) name = "s" + std::to_string(i);
    return Field::coordinate_ring(k, {name});
}

std::optional<UPoly> line_constraint_gcd(const RestrictedLieAlgebra& g, const Vec& a, const Vec& b,
                                         const std::function<std::vector<Vec>(const Vec&)>& constraints) {
    const Field& ring = auxiliary_ring(g.field());
    const Scalar s = ring.variable();
    Vec v;
    for (std::size_t i = 0; i < a.size(); ++i) v.push_back(ring.lift(a[i]) + s * b[i]);
    std::optional<UPoly> acc;
    for (const auto& vec : constraints(v))
        for (const auto& x : vec) {
            if (x.is_zero()) continue;
            const UPoly u = x.field().kind() == FieldKind::coordinate_ring ? UPoly::from_ring_element(x)
                                                                           : UPoly(g.field(), {x});
            acc = acc ? gcd(*acc, u) : u.monic();
        }
    return acc;
}

Vec wedge(const Vec& u, const Vec& w) {
    Vec r;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) r.push_back(u[i] * w[j] - u[j] * w[i]);
    return r;
}

}  // namespace radu
