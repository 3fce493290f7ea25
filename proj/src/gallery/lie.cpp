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

#include "radu/gallery/lie.hpp"

#include <set>

#include "radu/errors.hpp"

namespace radu::gallery {

AlgebraWithRep imperfect_G(std::uint32_t p, const Scalar& a) {
    const Field& k = a.field();
    if (k.characteristic() != p) throw FieldMismatch("a lies in characteristic " + std::to_string(k.characteristic()));
    if (pth_root(a)) throw std::invalid_argument("a = " + a.to_string() + " is a p-th power in " + k.name());
    StructureConstants sc = StructureConstants::zero(k, {"X", "Y", "Z"});
    sc.set_bracket(2, 1, unit_vec(k, 3, 1));
    sc.ppowers[0] = unit_vec(k, 3, 0);
    sc.ppowers[1] = scale(a, unit_vec(k, 3, 0));
    sc.ppowers[2] = unit_vec(k, 3, 2);

    Matrix x = Matrix::identity(k, p), y(k, p, p), z(k, p, p);
    for (std::uint32_t i = 0; i + 1 < p; ++i) y.at(i + 1, i) = k.one();
    y.at(0, p - 1) = a;
    for (std::uint32_t i = 0; i < p; ++i) z.at(i, i) = k.from_int(i + 1);
    return {RestrictedLieAlgebra(std::move(sc)), {x, y, z}};
}

AlgebraWithRep imperfect_G(std::uint32_t p) { return imperfect_G(p, Field::rational_functions(p).variable()); }

RestrictedLieAlgebra sl2_kernel_char2(const Field& f) {
    if (f.characteristic() != 2) throw FieldMismatch("the sl2 kernel fixture is defined in characteristic 2");
    StructureConstants sc = StructureConstants::zero(f, {"e", "h", "f"});
    sc.set_bracket(0, 2, unit_vec(f, 3, 1));
    sc.ppowers[1] = unit_vec(f, 3, 1);
    return RestrictedLieAlgebra(std::move(sc));
}

RestrictedLieAlgebra sl2_kernel_char2() { return sl2_kernel_char2(Field::prime(2)); }

RestrictedLieAlgebra alpha_lie(const Field& f, const std::string& label) {
    return RestrictedLieAlgebra(StructureConstants::zero(f, {label}));
}

RestrictedLieAlgebra mu_lie(const Field& f, const std::string& label) {
    StructureConstants sc = StructureConstants::zero(f, {label});
    sc.ppowers[0] = unit_vec(f, 1, 0);
    return RestrictedLieAlgebra(std::move(sc));
}

RestrictedLieAlgebra torus_lie(const Field& f, std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    StructureConstants sc = StructureConstants::zero(f, labels);
    for (std::size_t i = 0; i < n; ++i) sc.ppowers[i] = unit_vec(f, n, i);
    return RestrictedLieAlgebra(std::move(sc));
}

RestrictedLieAlgebra direct_sum(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b) {
    if (&a.field() != &b.field()) throw FieldMismatch("direct sum of algebras over different fields");
    const Field& f = a.field();
    const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
    std::vector<std::string> labels = a.labels();
    std::set<std::string> used(labels.begin(), labels.end());
    for (auto l : b.labels()) {
        while (used.count(l)) l += "'";
        used.insert(l);
        labels.push_back(l);
    }
    auto embed = [&](const Vec& v, std::size_t offset) {
        Vec r = zero_vec(f, n);
        for (std::size_t i = 0; i < v.size(); ++i) r[offset + i] = v[i];
        return r;
    };
    StructureConstants sc = StructureConstants::zero(f, labels);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) sc.brackets[i * n + j] = embed(a.basis_bracket(i, j), 0);
        sc.ppowers[i] = embed(a.basis_ppower(i), 0);
    }
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = 0; j < nb; ++j) sc.brackets[(na + i) * n + na + j] = embed(b.basis_bracket(i, j), na);
        sc.ppowers[na + i] = embed(b.basis_ppower(i), na);
    }
    return RestrictedLieAlgebra(std::move(sc));
}

Matrix represent(const std::vector<Matrix>& rho, const Vec& x) {
    if (rho.empty()) throw std::invalid_argument("empty representation");
    Matrix m(x.empty() ? rho[0].field() : x[0].field(), rho[0].rows(), rho[0].cols());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) m = m + rho[i].scaled(x[i]);
    return m;
}

RepReport verify_restricted_rep(const RestrictedLieAlgebra& g, const std::vector<Matrix>& rho) {
    const std::size_t n = g.dim();
    if (rho.size() != n)
        return {false, "count", std::to_string(rho.size()) + " matrices for dimension " + std::to_string(n)};
    if (n == 0) return {};
    const std::size_t d = rho[0].rows();
    for (const auto& m : rho)
        if (m.rows() != d || m.cols() != d || &m.field() != &g.field())
            return {false, "shape", "matrices must be square of one size over " + g.field().name()};
    const auto& lab = g.labels();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Matrix lhs = represent(rho, g.basis_bracket(i, j));
            const Matrix rhs = rho[i] * rho[j] - rho[j] * rho[i];
            if (lhs != rhs)
                return {false, "bracket", "rho([" + lab[i] + "," + lab[j] + "]) = " + lhs.to_string() +
                                              " but the commutator is " + rhs.to_string()};
        }
    const std::uint32_t p = g.field().characteristic();
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix lhs = represent(rho, g.basis_ppower(i));
        const Matrix rhs = rho[i].pow(p);
        if (lhs != rhs)
            return {false, "p-power", "rho(" + lab[i] + "^[p]) = " + lhs.to_string() + " but rho(" + lab[i] +
                                          ")^p = " + rhs.to_string()};
    }
    std::vector<Vec> cols;
    for (const auto& m : rho) {
        Vec flat;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) flat.push_back(m.at(r, c));
        cols.push_back(std::move(flat));
    }
    const std::size_t rk = rank(Matrix::from_columns(g.field(), d * d, cols));
    if (rk != n) return {false, "faithful", "image has dimension " + std::to_string(rk) + " < " + std::to_string(n)};
    return {};
}

}  // namespace radu::gallery
