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

#include <random>
#include <set>

#include "doctest.h"
#include "radu/errors.hpp"
#include "radu/gallery/hopf.hpp"
#include "radu/gallery/lie.hpp"
#include "radu/hopf/enveloping.hpp"
#include "radu/hopf/subgroups.hpp"
#include "radu/lie/analysis.hpp"

using namespace radu;

namespace {

const Field& F2 = Field::prime(2);

Vec e(const HopfAlgebra& h, const std::string& label) {
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (h.labels()[i] == label) return unit_vec(h.field(), h.dim(), i);
    FAIL("no basis element " << label);
    return {};
}

// Subspaces spanned by vectors with coefficients in `coeffs`.
std::vector<Subspace> spans_over(const Field& f, std::size_t n, const std::vector<Scalar>& coeffs) {
    std::vector<Vec> vecs;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= coeffs.size();
    for (std::size_t k = 1; k < total; ++k) {
        Vec v;
        std::size_t x = k;
        for (std::size_t i = 0; i < n; ++i, x /= coeffs.size()) v.push_back(coeffs[x % coeffs.size()]);
        vecs.push_back(v);
    }
    std::vector<Subspace> out{Subspace(f, n)};
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<Subspace> next = out;
        for (const auto& s : out)
            for (const auto& v : vecs) {
                Subspace w = s.with(v);
                bool seen = false;
                for (const auto& t : next)
                    if (t == w) seen = true;
                if (!seen) next.push_back(w);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("standard Hopf algebras validate") {
    CHECK(validate_hopf(gallery::alpha_hopf(F2).data()).ok);
    CHECK(validate_hopf(gallery::mu_hopf(F2).data()).ok);
    CHECK(validate_hopf(gallery::alpha_hopf(F2, 2).data()).ok);
    CHECK(validate_hopf(gallery::alpha_hopf(Field::prime(3)).data()).ok);
    CHECK(validate_hopf(gallery::mu_hopf(Field::prime(5)).data()).ok);
    const auto prod = tensor_product(gallery::alpha_hopf(F2), gallery::mu_hopf(F2));
    CHECK(prod.dim() == 4);
    CHECK(prod.labels() == std::vector<std::string>{"one", "g", "x", "x_g"});
    CHECK(validate_hopf(prod.data()).ok);
}

TEST_CASE("altered antipode fails the convolution identity") {
    HopfData h = gallery::alpha_hopf(F2).data();
    h.antipode.at(0, 1) = F2.one();  // S(x) = x + 1
    const auto r = validate_hopf(h);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "antipode");
    CHECK(r.indices == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(HopfAlgebra{h}, InvalidAlgebra);
}

TEST_CASE("dual of dual recovers the structure constants") {
    for (const auto& h : {gallery::alpha_hopf(F2, 2), gallery::mu_hopf(Field::prime(3)),
                          tensor_product(gallery::alpha_hopf(F2), gallery::mu_hopf(F2))}) {
        const auto d = dual(h);
        CHECK(validate_hopf(d.data()).ok);
        const auto dd = dual(d);
        CHECK(dd.data().algebra.mult == h.data().algebra.mult);
        CHECK(dd.data().comult == h.data().comult);
        CHECK(dd.data().counit == h.data().counit);
        CHECK(dd.data().algebra.unit == h.data().algebra.unit);
        CHECK(dd.data().antipode == h.data().antipode);
    }
}

TEST_CASE("subgroup ideals in alpha_2 x mu_2") {
    const auto a = tensor_product(gallery::alpha_hopf(F2), gallery::mu_hopf(F2));
    const Vec x = e(a, "x"), g = e(a, "g"), one = e(a, "one");
    const Vec gp1 = add(g, one);

    const Subspace bad = a.algebra().ideal_generated({a.multiply(x, gp1)});
    CHECK(bad.dim() == 1);
    const auto r = is_subgroup_ideal(a, bad);
    CHECK_FALSE(r.ok);
    CHECK(r.failed == "comultiplication");
    REQUIRE(r.witness);
    CHECK(bad.contains(*r.witness));
    // The witness's image in the quotient tensor square is nonzero, computed independently.
    const QuotientData q = quotient(bad);
    const Vec delta = a.comultiply(*r.witness);
    bool nonzero = false;
    for (std::size_t i = 0; i < q.projection.rows(); ++i)
        for (std::size_t j = 0; j < q.projection.rows(); ++j) {
            Scalar s = F2.zero();
            for (std::size_t u = 0; u < 4; ++u)
                for (std::size_t v = 0; v < 4; ++v) s += q.projection.at(i, u) * q.projection.at(j, v) * delta[u * 4 + v];
            if (!s.is_zero()) nonzero = true;
        }
    CHECK(nonzero);

    CHECK(is_subgroup_ideal(a, Subspace(F2, 4)).ok);
    CHECK(is_subgroup_ideal(a, a.augmentation_ideal()).ok);
    CHECK(is_subgroup_ideal(a, a.algebra().ideal_generated({x})).ok);
    CHECK(is_subgroup_ideal(a, a.algebra().ideal_generated({gp1})).ok);
    CHECK(is_subgroup_ideal(a, Subspace::span(F2, 4, {x})).failed == "ideal");
}

TEST_CASE("tensor intersection identity") {
    const auto a4 = gallery::truncated_polynomial(F2, 4);
    const Vec x = unit_vec(F2, 4, 1);
    const Subspace i2 = a4.ideal_generated({a4.power(x, 2)}), i3 = a4.ideal_generated({a4.power(x, 3)});
    CHECK(tensor_intersection_identity(a4, {i2, i3}).equal);
    CHECK(tensor_intersection_identity(a4, {i2}).equal);

    const auto sq = gallery::square_zero(F2, {"x", "y"});
    const Subspace ix = sq.ideal_generated({unit_vec(F2, 3, 1)}), iy = sq.ideal_generated({unit_vec(F2, 3, 2)});
    const auto r = tensor_intersection_identity(sq, {ix, iy});
    CHECK_FALSE(r.equal);
    CHECK(r.lhs.dim() == 0);
    CHECK(r.rhs.contains(tensor(unit_vec(F2, 3, 1), unit_vec(F2, 3, 2))));
    REQUIRE(r.witness);
    CHECK_FALSE(r.lhs.contains(*r.witness));
}

TEST_CASE("tensor intersection identity on random nested chains") {
    std::mt19937_64 rng(7);
    const Field& f3 = Field::prime(3);
    std::vector<AssociativeAlgebra> algebras{gallery::truncated_polynomial(F2, 6), gallery::truncated_polynomial(f3, 5),
                                             gallery::square_zero(F2, {"x", "y", "z"}),
                                             tensor_product(gallery::alpha_hopf(F2), gallery::mu_hopf(F2)).algebra(),
                                             gallery::square_zero(f3, {"x", "y", "z", "w", "v"})};
    for (int trial = 0; trial < 100; ++trial) {
        const auto& a = algebras[rng() % algebras.size()];
        const Field& f = a.field();
        std::vector<Subspace> chain{Subspace::whole(f, a.dim())};
        const std::size_t len = rng() % 5 + 1;
        while (chain.size() < len) {
            std::vector<Vec> gens;
            for (const auto& b : chain.back().basis())
                if (rng() % 2) gens.push_back(scale(f.element(rng() % f.order()), b));
            chain.push_back(a.ideal_generated(gens));
        }
        for (std::size_t i = 1; i < chain.size(); ++i) REQUIRE(chain[i - 1].contains(chain[i]));
        CHECK(tensor_intersection_identity(a, chain).equal);
    }
}

TEST_CASE("schematic unions") {
    const auto a4 = gallery::alpha_hopf(F2, 2);
    const Vec x2 = e(a4, "x2");
    const Subspace k1 = frobenius_kernel(a4, 1);
    CHECK(k1 == a4.algebra().ideal_generated({x2}));
    const auto u = schematic_union(a4, {k1, Subspace(F2, 4)});
    CHECK(u.ideal.is_zero());
    CHECK(u.check.ok);
    CHECK(u.directed);
    CHECK(schematic_union(a4, {k1}).ideal == k1);

    const auto prod = tensor_product(gallery::alpha_hopf(F2), gallery::mu_hopf(F2));
    const Vec x = e(prod, "x"), gp1 = add(e(prod, "g"), e(prod, "one"));
    const Subspace ia = prod.algebra().ideal_generated({gp1});  // alpha_2
    const Subspace im = prod.algebra().ideal_generated({x});    // mu_2
    CHECK_THROWS_AS(schematic_union(prod, {ia, im}), NonDirectedFamily);
    try {
        schematic_union(prod, {ia, im});
    } catch (const NonDirectedFamily& err) {
        CHECK(err.first() == 0);
        CHECK(err.second() == 1);
    }
    const auto forced = schematic_union(prod, {ia, im}, true);
    CHECK_FALSE(forced.directed);
    CHECK_FALSE(forced.check.ok);
    CHECK(forced.ideal == prod.algebra().ideal_generated({prod.multiply(x, gp1)}));
}

TEST_CASE("Frobenius kernels") {
    const auto a4 = gallery::alpha_hopf(F2, 2);
    CHECK(frobenius_kernel(a4, 1).dim() == 2);
    CHECK(frobenius_kernel(a4, 2).is_zero());
    CHECK(frobenius_kernel(a4, 1).contains(frobenius_kernel(a4, 2)));
    CHECK(frobenius_kernel(gallery::mu_hopf(F2), 1).is_zero());
    CHECK(is_subgroup_ideal(a4, frobenius_kernel(a4, 1)).ok);
    const auto a9 = gallery::alpha_hopf(Field::prime(3), 2);
    CHECK(frobenius_kernel(a9, 1).dim() == 6);
}

TEST_CASE("restricted enveloping algebra of a one-dimensional alpha") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Field& f = Field::prime(p);
        const auto g = gallery::alpha_lie(f);
        const auto u = restricted_enveloping_algebra(g);
        CHECK(validate_hopf(u.hopf.data()).ok);
        const auto d = dual(u.hopf);
        CHECK(validate_hopf(d.data()).ok);
        CHECK(d.is_commutative());
        // x = d_v is primitive and nilpotent of order exactly p.
        const Vec x = e(d, "d_v");
        CHECK(d.comultiply(x) == add(tensor(x, d.algebra().unit()), tensor(d.algebra().unit(), x)));
        for (std::uint32_t k = 1; k < p; ++k) CHECK_FALSE(is_zero(d.algebra().power(x, k)));
        CHECK(is_zero(d.algebra().power(x, p)));
    }
}

TEST_CASE("enveloping algebras of the fixtures") {
    const auto G = gallery::imperfect_G(2);
    const auto u = restricted_enveloping_algebra(G.algebra);
    CHECK(u.hopf.dim() == 8);
    CHECK(validate_hopf(u.hopf.data()).ok);
    CHECK_FALSE(u.hopf.is_commutative());
    CHECK(u.hopf.is_cocommutative());
    const auto d = dual(u.hopf);
    CHECK(validate_hopf(d.data()).ok);
    CHECK(d.is_commutative());
    CHECK(frobenius_kernel(d, 1).is_zero());
    CHECK(subgroup_ideal_from_p_subalgebra(u, d, G.algebra, G.algebra.zero_subspace()) == d.augmentation_ideal());
    CHECK(subgroup_ideal_from_p_subalgebra(u, d, G.algebra, G.algebra.whole()).is_zero());
    CHECK_THROWS_AS(is_normal(u.hopf, Subspace(u.hopf.field(), 8)), UnsupportedKind);

    // [Y,Z] in u: e_Y e_Z = e_Z e_Y + [Y,Z] and the PBW normal form keeps X < Y < Z.
    const Vec eY = u.embed(G.algebra.basis(1)), eZ = u.embed(G.algebra.basis(2));
    CHECK(sub(u.hopf.multiply(eZ, eY), u.hopf.multiply(eY, eZ)) == u.embed(G.algebra.basis(1)));
    // Y^2 = Y^[2] = tX
    CHECK(u.hopf.multiply(eY, eY) == u.embed(G.algebra.p_power(G.algebra.basis(1))));

    const auto sl = gallery::sl2_kernel_char2();
    const auto us = restricted_enveloping_algebra(sl);
    CHECK(validate_hopf(us.hopf.data()).ok);
    CHECK(validate_hopf(dual(us.hopf).data()).ok);
    CHECK(frobenius_kernel(dual(us.hopf), 1).is_zero());

    CHECK_THROWS_AS(restricted_enveloping_algebra(gallery::torus_lie(F2, 8)), CapExceeded);
    CHECK_NOTHROW(restricted_enveloping_algebra(gallery::torus_lie(F2, 7)));
    CHECK_THROWS_AS(enveloping_of(u, G.algebra, G.algebra.span({G.algebra.basis(1)})), NotAPIdeal);
}

TEST_CASE("normality matches p-ideals") {
    const auto G = gallery::imperfect_G(2);
    const auto& g = G.algebra;
    const auto u = restricted_enveloping_algebra(g);
    const auto d = dual(u.hopf);
    const Subspace N = g.span({g.basis(0), g.basis(1)});
    CHECK(is_normal(d, subgroup_ideal_from_p_subalgebra(u, d, g, N)));
    CHECK_FALSE(is_normal(d, subgroup_ideal_from_p_subalgebra(u, d, g, g.span({g.basis(2)}))));
    CHECK(is_normal(d, d.augmentation_ideal()));
    CHECK(is_normal(d, d.augmentation_ideal(), true));

    const Field& k = g.field();
    std::size_t checked = 0;
    for (const auto& s : spans_over(k, 3, {k.zero(), k.one(), k.variable()})) {
        if (!is_restricted_subalgebra(g, s)) continue;
        const Subspace ideal = subgroup_ideal_from_p_subalgebra(u, d, g, s);
        CHECK(is_normal(d, ideal) == is_p_ideal(g, s));
        CHECK(is_normal(d, ideal, true) == is_p_ideal(g, s));
        ++checked;
    }
    CHECK(checked >= 5);

    const auto sl = gallery::sl2_kernel_char2();
    const auto us = restricted_enveloping_algebra(sl);
    const auto ds = dual(us.hopf);
    std::size_t sl_checked = 0;
    for (const auto& s : spans_over(F2, 3, {F2.zero(), F2.one()})) {
        if (!is_restricted_subalgebra(sl, s)) continue;
        CHECK(is_normal(ds, subgroup_ideal_from_p_subalgebra(us, ds, sl, s)) == is_p_ideal(sl, s));
        ++sl_checked;
    }
    CHECK(sl_checked >= 5);
}

TEST_CASE("commutative cocommutative algebras have only normal subgroups") {
    const auto a = tensor_product(gallery::alpha_hopf(F2), gallery::mu_hopf(F2));
    REQUIRE(a.is_commutative());
    REQUIRE(a.is_cocommutative());
    for (const auto& s : spans_over(F2, 4, {F2.zero(), F2.one()}))
        if (a.algebra().is_ideal(s) && is_subgroup_ideal(a, s).ok) CHECK(is_normal(a, s));
}
