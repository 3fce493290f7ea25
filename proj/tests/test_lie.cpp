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

#include "doctest.h"
#include "radu/errors.hpp"
#include "radu/gallery/lie.hpp"
#include "radu/lie/analysis.hpp"
#include "radu/lie/radical.hpp"
#include "radu/semilinear.hpp"

using namespace radu;

namespace {

Scalar random_scalar(std::mt19937_64& rng, const Field& f) {
    if (f.is_finite()) return f.element(rng() % f.order());
    const auto p = f.characteristic();
    std::vector<std::uint32_t> num(rng() % 4 + 1), den(rng() % 3 + 1);
    for (auto& x : num) x = static_cast<std::uint32_t>(rng() % p);
    for (auto& x : den) x = static_cast<std::uint32_t>(rng() % p);
    FpPoly d(p, den);
    if (d.is_zero()) d = FpPoly::constant(p, 1);
    return make_rational(f, FpPoly(p, num), d);
}

Vec random_vec(std::mt19937_64& rng, const Field& f, std::size_t n) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(rng, f));
    return v;
}

Subspace span_of(const RestrictedLieAlgebra& g, std::initializer_list<std::size_t> idx) {
    std::vector<Vec> b;
    for (auto i : idx) b.push_back(g.basis(i));
    return g.span(b);
}

}  // namespace

TEST_CASE("imperfect G validates and rejects an altered p-power") {
    const auto G = gallery::imperfect_G(2);
    CHECK(validate(G.algebra.constants()).ok);

    StructureConstants bad = G.algebra.constants();
    bad.ppowers[1] = unit_vec(G.algebra.field(), 3, 2);  // Y^[2] = Z
    const ValidationReport r = validate(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_check == "restrictedness");
    REQUIRE(r.indices.size() == 2);
    CHECK(r.indices[0] == 1);
    CHECK(r.indices[1] == 1);
    CHECK_THROWS_AS(RestrictedLieAlgebra{bad}, InvalidAlgebra);

    const Field& f2 = Field::prime(2);
    StructureConstants ab = StructureConstants::zero(f2, {"a", "b"});
    ab.ppowers[0] = unit_vec(f2, 2, 1);
    CHECK(validate(ab).ok);

    StructureConstants alt = StructureConstants::zero(f2, {"X", "Y"});
    alt.brackets[0] = unit_vec(f2, 2, 1);
    CHECK(validate(alt).failed_check == "alternating");

    const Scalar t = Field::rational_functions(2).variable();
    CHECK_THROWS_AS(gallery::imperfect_G(2, t * t), std::invalid_argument);
}

TEST_CASE("p-power values") {
    const auto G = gallery::imperfect_G(2);
    const auto& g = G.algebra;
    const Scalar t = g.field().variable();
    CHECK(g.p_power(g.basis(1)) == scale(t, g.basis(0)));
    CHECK(is_zero(g.p_power(zero_vec(g.field(), 3))));

    const auto sl2 = gallery::sl2_kernel_char2();
    CHECK(sl2.p_power(add(sl2.basis(0), sl2.basis(2))) == sl2.basis(1));
}

TEST_CASE("generic p-power") {
    const auto G = gallery::imperfect_G(2);
    const auto gp = generic_p_power(G.algebra);
    REQUIRE(gp.vars == std::vector<std::string>{"x", "y", "z"});
    const Field& r = *gp.ring;
    const Scalar x = r.variable(0), y = r.variable(1), z = r.variable(2);
    const Scalar t = r.lift(G.algebra.field().variable());
    CHECK(gp.value[0] == x * x + t * y * y);
    CHECK(gp.value[1] == y * z);
    CHECK(gp.value[2] == z * z);

    const auto torus = gallery::torus_lie(Field::prime(3), 2);
    const auto tp = generic_p_power(torus);
    CHECK(tp.value[0] == tp.ring->variable(0).pow(3));
    CHECK(tp.value[1] == tp.ring->variable(1).pow(3));
    CHECK(is_zero(generic_p_power(gallery::alpha_lie(Field::prime(5))).value));
}

TEST_CASE("generic p-power specializes") {
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {2u, 3u}) {
        const auto G = gallery::imperfect_G(p);
        const auto& g = G.algebra;
        const auto gp = generic_p_power(g);
        for (int s = 0; s < 100; ++s) {
            const Vec v = random_vec(rng, g.field(), 3);
            // Evaluate polynomial coefficients at v.
            Vec spec;
            for (const auto& c : gp.value) {
                Scalar acc = g.field().zero();
                for (const auto& term : c.mpoly().terms) {
                    Scalar m = term.coeff;
                    for (std::size_t k = 0; k < 3; ++k) m *= v[k].pow(term.exps[k]);
                    acc += m;
                }
                spec.push_back(acc);
            }
            CHECK(spec == g.p_power(v));
        }
    }
}

TEST_CASE("Jacobson consistency and representation oracle") {
    std::mt19937_64 rng(23);
    for (std::uint32_t p : {2u, 3u}) {
        const auto G = gallery::imperfect_G(p);
        const auto& g = G.algebra;
        CHECK(gallery::verify_restricted_rep(g, G.representation).ok);
        for (int s = 0; s < 200; ++s) {
            const Vec x = random_vec(rng, g.field(), 3), y = random_vec(rng, g.field(), 3);
            const Vec cross = sub(sub(g.p_power(add(x, y)), g.p_power(x)), g.p_power(y));
            CHECK(cross == g.jacobson_cross_terms(x, y));
            if (p == 2) CHECK(cross == g.bracket(x, y));
            const Matrix rx = gallery::represent(G.representation, x), ry = gallery::represent(G.representation, y);
            CHECK(gallery::represent(G.representation, g.bracket(x, y)) == rx * ry - ry * rx);
            CHECK(gallery::represent(G.representation, g.p_power(x)) == rx.pow(p));
        }
    }
    // Identity-only assignment breaks the bracket check.
    const auto G = gallery::imperfect_G(2);
    const Matrix id = Matrix::identity(G.algebra.field(), 2);
    CHECK(gallery::verify_restricted_rep(G.algebra, {id, id, id}).failed_check == "bracket");
}

TEST_CASE("p-nilpotency") {
    const auto G = gallery::imperfect_G(2);
    const auto& g = G.algebra;
    CHECK_FALSE(is_p_nilpotent(g, g.basis(1)));
    const auto sl2 = gallery::sl2_kernel_char2();
    CHECK(is_p_nilpotent(sl2, sl2.basis(0)));
    CHECK_FALSE(is_p_nilpotent(sl2, sl2.basis(1)));

    const Field& ks = Field::rational_functions(2, "s");
    const auto e = FieldEmbedding::inseparable(g.field(), ks, 1);
    const auto h = base_change(g, e);
    const Vec w = add(scale(ks.variable(), h.basis(0)), h.basis(1));
    CHECK(is_p_nilpotent(h, w));
    CHECK(h.basis_ppower(1)[0] == ks.variable() * ks.variable());
}

TEST_CASE("spin closures") {
    const auto G = gallery::imperfect_G(2);
    const auto& g = G.algebra;
    CHECK(spin_p_ideal(g, span_of(g, {1})) == span_of(g, {0, 1}));
    CHECK(spin_p_ideal(g, g.zero_subspace()).is_zero());
    const auto sl2 = gallery::sl2_kernel_char2();
    CHECK(spin_subalgebra(sl2, span_of(sl2, {0, 2})).is_whole());
}

TEST_CASE("characteristic series") {
    const auto G = gallery::imperfect_G(2);
    const auto& g = G.algebra;
    const auto cs = characteristic_series(g);
    CHECK(cs.center == span_of(g, {0}));
    REQUIRE(cs.derived.size() == 3);
    CHECK(cs.derived[1] == span_of(g, {1}));
    CHECK(cs.derived[2].is_zero());
    CHECK(cs.solvable);
    CHECK_FALSE(cs.nilpotent);
    CHECK(cs.lower_central.back() == span_of(g, {1}));

    const auto sl2 = gallery::sl2_kernel_char2();
    const auto s = characteristic_series(sl2);
    CHECK(s.center == span_of(sl2, {1}));
    CHECK(s.nilpotent);
    CHECK(s.nilpotency_class == 2);

    const auto torus = gallery::torus_lie(Field::prime(2), 3);
    CHECK(characteristic_series(torus).center.is_whole());
}

TEST_CASE("unipotence") {
    CHECK(is_unipotent(gallery::alpha_lie(Field::prime(3)), Subspace::whole(Field::prime(3), 1)));
    const auto sl2 = gallery::sl2_kernel_char2();
    CHECK_FALSE(is_unipotent(sl2, sl2.whole()));
    CHECK(is_unipotent(sl2, span_of(sl2, {0})));
    CHECK(is_unipotent(sl2, span_of(sl2, {2})));
    const auto G = gallery::imperfect_G(2);
    CHECK_FALSE(is_unipotent(G.algebra, span_of(G.algebra, {0, 1})));
    CHECK_THROWS_AS(is_unipotent(sl2, span_of(sl2, {0, 2})), NotAPIdeal);
    CHECK(is_unipotent(G.algebra, G.algebra.zero_subspace()));
}

TEST_CASE("quotients") {
    const auto G = gallery::imperfect_G(2);
    const auto& g = G.algebra;
    const auto q = quotient(g, span_of(g, {0}));
    const auto& a = q.algebra;
    REQUIRE(a.dim() == 2);
    CHECK(a.labels() == std::vector<std::string>{"Y", "Z"});
    CHECK(validate(a.constants()).ok);
    CHECK(a.basis_bracket(1, 0) == a.basis(0));
    CHECK(is_zero(a.basis_ppower(0)));
    CHECK(a.basis_ppower(1) == a.basis(1));

    CHECK(quotient(g, g.zero_subspace()).algebra.constants().brackets == g.constants().brackets);
    CHECK(quotient(g, g.whole()).algebra.dim() == 0);
    CHECK_THROWS_AS(quotient(g, span_of(g, {2})), NotAPIdeal);
}

TEST_CASE("subnormal series") {
    const auto G = gallery::imperfect_G(2);
    const auto& g = G.algebra;
    const auto steps = verify_subnormal_series(g, {g.zero_subspace(), span_of(g, {0}), span_of(g, {0, 1}), g.whole()});
    REQUIRE(steps.size() == 3);
    CHECK(steps[0].describe() == "mu-form(1)");
    CHECK(steps[1].describe() == "alpha-type");
    CHECK(steps[2].describe() == "mu-form(1)");

    const auto alpha = gallery::alpha_lie(Field::prime(2));
    const auto a = verify_subnormal_series(alpha, {alpha.zero_subspace(), alpha.whole()});
    CHECK(a[0].kind == SeriesStep::Kind::alpha);

    CHECK_THROWS_AS(verify_subnormal_series(g, {g.zero_subspace(), span_of(g, {2}), g.whole()}), NotAPIdeal);
}

TEST_CASE("one-dimensional p-ideals") {
    const auto G = gallery::imperfect_G(2);
    const auto r = one_dim_p_ideals(G.algebra);
    REQUIRE(r.has_value());
    REQUIRE(r->size() == 1);
    CHECK((*r)[0] == span_of(G.algebra, {0}));

    const auto sl2 = gallery::sl2_kernel_char2();
    const auto s = one_dim_p_ideals(sl2);
    REQUIRE(s.has_value());
    REQUIRE(s->size() == 1);
    CHECK((*s)[0] == span_of(sl2, {1}));

    const auto torus = gallery::torus_lie(Field::prime(2), 2);
    const auto tr = one_dim_p_ideals(torus);
    REQUIRE(tr.has_value());
    CHECK(tr->size() == 3);
}

TEST_CASE("multiplicative type") {
    CHECK(is_mult_type(gallery::torus_lie(Field::prime(2), 2)));
    CHECK_FALSE(is_mult_type(gallery::alpha_lie(Field::prime(2))));
    const auto G = gallery::imperfect_G(2);
    const auto n = subalgebra(G.algebra, span_of(G.algebra, {0, 1}));
    CHECK_FALSE(is_mult_type(n.algebra));
    CHECK(is_mult_type(gallery::torus_lie(Field::prime(2), 0)));
}

TEST_CASE("radical of the imperfect G and its relatives") {
    const auto G = gallery::imperfect_G(2);
    const auto& g = G.algebra;
    const auto c = rad_p(g);
    CHECK(c.radical.is_zero());
    CHECK(c.verdict == Verdict::exact);
    CHECK(c.strategy == Strategy::split_weight);
    CHECK(replay(g, c) == c.radical);

    const auto q = quotient(g, span_of(g, {0})).algebra;
    const auto cq = rad_p(q);
    CHECK(cq.radical == q.span({q.basis(0)}));
    CHECK(cq.verdict == Verdict::exact);
    CHECK(replay(q, cq) == cq.radical);

    const auto n = subalgebra(g, span_of(g, {0, 1})).algebra;
    const auto cn = rad_p(n);
    CHECK(cn.radical.is_zero());
    CHECK(cn.verdict == Verdict::exact);

    CHECK(is_p_reductive(g).verdict == Tristate::yes);
    CHECK(is_p_reductive(n).verdict == Tristate::no);
    CHECK(is_p_reductive(q).verdict == Tristate::no);
    CHECK(is_p_reductive(gallery::mu_lie(Field::rational_functions(3))).verdict == Tristate::yes);
}

TEST_CASE("radical of the sl2 kernel and standard groups") {
    const auto sl2 = gallery::sl2_kernel_char2();
    const auto c = rad_p(sl2);
    CHECK(c.radical.is_zero());
    CHECK(c.strategy == Strategy::finite_scan);
    CHECK(c.verdict == Verdict::exact);

    const Field& f = Field::prime(3);
    const auto am = gallery::direct_sum(gallery::alpha_lie(f, "a"), gallery::mu_lie(f, "m"));
    const auto ca = rad_p(am);
    CHECK(ca.radical == am.span({am.basis(0)}));
    CHECK(ca.trace.front().strategy == Strategy::abelian);

    RadicalOptions forced;
    forced.force = Strategy::finite_scan;
    CHECK(rad_p(am, forced).radical == ca.radical);
}

TEST_CASE("base change composes") {
    const auto G = gallery::imperfect_G(2);
    const Field& ks = Field::rational_functions(2, "s");
    const Field& kr = Field::rational_functions(2, "r");
    const auto e1 = FieldEmbedding::inseparable(G.algebra.field(), ks, 1);
    const auto e2 = FieldEmbedding::inseparable(ks, kr, 2);
    const auto a = base_change(base_change(G.algebra, e1), e2);
    const auto b = base_change(G.algebra, e1.then(e2));
    CHECK(a.constants().brackets == b.constants().brackets);
    CHECK(a.constants().ppowers == b.constants().ppowers);

    const auto sl2 = gallery::sl2_kernel_char2();
    const auto big = base_change(sl2, FieldEmbedding::inclusion(Field::prime(2), Field::galois(2, 2)));
    CHECK(&big.field() == &Field::galois(2, 2));
    CHECK(rad_p(big).radical.is_zero());
}
