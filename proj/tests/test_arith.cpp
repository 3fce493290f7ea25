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
#include "radu/embedding.hpp"
#include "radu/errors.hpp"
#include "radu/field.hpp"
#include "radu/linalg.hpp"
#include "radu/semilinear.hpp"
#include "radu/univariate.hpp"

using namespace radu;

namespace {

FpPoly random_poly(std::mt19937_64& rng, std::uint32_t p, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return FpPoly(p, c);
}

Scalar random_fraction(std::mt19937_64& rng, const Field& f) {
    FpPoly den = random_poly(rng, f.characteristic(), 3);
    while (den.is_zero()) den = random_poly(rng, f.characteristic(), 3);
    return make_rational(f, random_poly(rng, f.characteristic(), 4), den);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    const Field& f5 = Field::prime(5);
    CHECK(f5.from_int(7) == f5.from_int(2));
    CHECK(f5.from_int(-1) == f5.from_int(4));
    CHECK((f5.from_int(3) * f5.from_int(2)).is_one());
    CHECK(f5.from_int(3).inverse() == f5.from_int(2));
    CHECK(&Field::prime(5) == &f5);
    CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
}

TEST_CASE("extension field arithmetic") {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t m : {2u, 3u, 4u}) {
            const Field& f = Field::galois(p, m);
            CHECK(is_irreducible(f.modulus()));
            // Multiplicative group has order q - 1.
            for (std::uint64_t i = 1; i < std::min<std::uint64_t>(f.order(), 40); ++i) {
                const Scalar x = f.element(i);
                CHECK(x.pow(f.order() - 1).is_one());
                CHECK((x * x.inverse()).is_one());
                CHECK(f.index_of(x) == i);
                CHECK(*pth_root(x.frobenius()) == x);
            }
        }
    CHECK(Field::galois(2, 1).kind() == FieldKind::prime);
}

TEST_CASE("rational function canonical form") {
    const Field& k = Field::rational_functions(2);
    const Scalar t = k.variable();
    const Scalar a = (t * t + k.one()) / (t + k.one());
    CHECK(a == t + k.one());
    CHECK(a.denominator().is_one());
    const Scalar b = k.one() / t;
    CHECK(b.to_string() == "1/t");
    CHECK((b * t).is_one());
    CHECK(parse_scalar(k, "(t^2+1)/t") == (t * t + k.one()) / t);
    CHECK(parse_scalar(k, "3*t") == t);
    CHECK_THROWS_AS(parse_scalar(k, "t/(t+t)"), ParseError);
    CHECK_THROWS_AS(parse_scalar(k, "x"), ParseError);
}

TEST_CASE("pth_root") {
    const Field& k = Field::rational_functions(2);
    const Scalar t = k.variable();
    CHECK(*pth_root(t * t) == t);
    CHECK_FALSE(pth_root(t).has_value());
    CHECK(pth_root(k.one())->is_one());
    CHECK(pth_root(Field::prime(3).one())->is_one());
    const Field& ring = Field::coordinate_ring(k, {"x"});
    CHECK_THROWS_AS(pth_root(ring.variable()), UnsupportedKind);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Scalar f = random_fraction(rng, k);
        REQUIRE(pth_root(f * f).has_value());
        CHECK(*pth_root(f * f) == f);
        if (!f.is_zero()) CHECK_FALSE(pth_root(t * f * f).has_value());
    }
}

TEST_CASE("frobenius components recombine") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u}) {
        const Field& k = Field::rational_functions(p);
        for (int i = 0; i < 50; ++i) {
            const Scalar f = random_fraction(rng, k);
            const auto g = frobenius_components(f);
            REQUIRE(g.size() == p);
            Scalar sum = k.zero();
            for (std::uint32_t j = 0; j < p; ++j) sum += k.variable().pow(j) * g[j].frobenius();
            CHECK(sum == f);
        }
    }
}

TEST_CASE("coordinate ring") {
    const Field& k = Field::rational_functions(2);
    const Field& r = Field::coordinate_ring(k, {"x", "y"});
    const Scalar x = r.variable(0), y = r.variable(1);
    const Scalar t = r.lift(k.variable());
    CHECK(((x + y) * (x + y)) == x * x + y * y);
    CHECK((x * x + t * y * y).to_string() == "x^2+t*y^2");
    CHECK(parse_scalar(r, "x^2+t*y^2") == x * x + t * y * y);
    CHECK_THROWS_AS(x / y, UnsupportedKind);
    CHECK((x / r.from_int(1)) == x);
    CHECK(parse_field("GF(2)(t)[x,y]").name() == r.name());
}

TEST_CASE("field literals") {
    CHECK(&parse_field("GF(2)") == &Field::prime(2));
    CHECK(&parse_field("GF(2^3)") == &Field::galois(2, 3));
    CHECK(&parse_field(" GF(3)(s) ") == &Field::rational_functions(3, "s"));
    CHECK_THROWS_AS(parse_field("GF(4)"), ParseError);
    CHECK_THROWS_AS(parse_field("GF(7^5)"), ParseError);
    CHECK_THROWS_AS(parse_field("F(2)"), ParseError);
}

TEST_CASE("subspace algebra") {
    const Field& f = Field::prime(3);
    auto e = [&](std::size_t i) { return unit_vec(f, 3, i); };
    const Subspace a = Subspace::span(f, 3, {e(0)}), b = Subspace::span(f, 3, {e(1)});
    CHECK(a.sum(b) == Subspace::span(f, 3, {e(0), e(1)}));
    const Subspace u = Subspace::span(f, 3, {e(0), e(1)}), w = Subspace::span(f, 3, {e(1), e(2)});
    CHECK(u.intersect(w) == Subspace::span(f, 3, {e(1)}));
    CHECK(u.contains(a));
    CHECK_FALSE(a.contains(u));
    CHECK_THROWS_AS(a.sum(Subspace(f, 2)), DimensionMismatch);

    const Field& f2 = Field::prime(2);
    const Subspace l = Subspace::span(f2, 2, {unit_vec(f2, 2, 0)});
    const QuotientData q = quotient(l);
    CHECK(q.complement.size() == 1);
    CHECK(is_zero(q.projection.apply(unit_vec(f2, 2, 0))));
    CHECK_FALSE(is_zero(q.projection.apply(unit_vec(f2, 2, 1))));
    CHECK((q.projection * q.section) == Matrix::identity(f2, 1));

    // Echelon basis is canonical.
    const Subspace s1 = Subspace::span(f, 3, {add(e(0), e(1)), e(1)});
    const Subspace s2 = Subspace::span(f, 3, {e(0), scale(f.from_int(2), e(1))});
    CHECK(s1 == s2);
}

TEST_CASE("matrix helpers") {
    const Field& k = Field::rational_functions(3);
    const Scalar t = k.variable();
    Matrix m(k, 2, 2);
    m.at(0, 0) = t;
    m.at(0, 1) = k.one();
    m.at(1, 0) = k.one();
    m.at(1, 1) = t;
    CHECK(determinant(m) == t * t - k.one());
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK((m * *inv) == Matrix::identity(k, 2));
    CHECK(nullspace(m).empty());
}

TEST_CASE("semilinear maps") {
    const Field& k = Field::rational_functions(2);
    const Scalar t = k.variable();
    Matrix b(k, 2, 2);
    b.at(0, 0) = k.one();
    b.at(0, 1) = t;
    const SemilinearMap phi(b);

    CHECK(rational_unipotent_part(phi).is_zero());
    CHECK(stable_rank(phi) == 1);
    const Matrix b2 = phi.iterate_matrix(2);
    CHECK(b2.at(0, 1) == t * t);

    const SemilinearMap zero(Matrix(k, 2, 2));
    CHECK(rational_unipotent_part(zero).is_whole());
    CHECK(stable_rank(zero) == 0);
    const SemilinearMap id(Matrix::identity(k, 2));
    CHECK(rational_unipotent_part(id).is_zero());
    CHECK(stable_rank(id) == 2);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        Matrix r(k, 3, 3);
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t c = 0; c < 3; ++c) r.at(a, c) = rng() % 3 ? k.zero() : random_fraction(rng, k);
        const SemilinearMap m(r);
        const Vec v{random_fraction(rng, k), random_fraction(rng, k), random_fraction(rng, k)};
        const Vec w{random_fraction(rng, k), random_fraction(rng, k), random_fraction(rng, k)};
        const Scalar c = random_fraction(rng, k);
        CHECK(m(add(v, w)) == add(m(v), m(w)));
        CHECK(m(scale(c, v)) == scale(c.frobenius(), m(v)));

        const Subspace u = rational_unipotent_part(m);
        for (const auto& x : u.basis()) {
            CHECK(u.contains(m(x)));
            Vec y = x;
            for (int s = 0; s < 3; ++s) y = m(y);
            CHECK(is_zero(y));
        }
        const auto ranks = rank_sequence(m);
        for (std::size_t s = 1; s < ranks.size(); ++s) CHECK(ranks[s] <= ranks[s - 1]);
        CHECK(ranks.back() == rank(m.iterate_matrix(ranks.size() + 2)));
    }
}

TEST_CASE("semilinear kernel over a finite field") {
    const Field& f = Field::galois(2, 2);
    Matrix b(f, 1, 2);
    b.at(0, 0) = f.one();
    b.at(0, 1) = f.variable();
    const Subspace k = semilinear_kernel(b);
    REQUIRE(k.dim() == 1);
    const Vec v = k.basis()[0];
    CHECK(is_zero(b.apply(frobenius(v))));
}

TEST_CASE("field embeddings") {
    const Field& kt = Field::rational_functions(2, "t");
    const Field& ks = Field::rational_functions(2, "s");
    const auto e = FieldEmbedding::inseparable(kt, ks, 1);
    const Scalar t = kt.variable(), s = ks.variable();
    CHECK(e(t + kt.one()) == s * s + ks.one());
    CHECK(e(kt.one() / t) == ks.one() / (s * s));
    const auto id = FieldEmbedding::inseparable(kt, kt, 0);
    CHECK(id(t) == t);

    const auto e2 = FieldEmbedding::inseparable(ks, Field::rational_functions(2, "r"), 1);
    const auto comp = e.then(e2);
    CHECK(comp(t) == Field::rational_functions(2, "r").variable().pow(4));

    CHECK_THROWS_AS(FieldEmbedding::inclusion(Field::prime(3), Field::galois(2, 2)), FieldMismatch);

    const auto inc = FieldEmbedding::inclusion(Field::galois(2, 2), Field::galois(2, 4));
    const Field& f4 = Field::galois(2, 2);
    for (std::uint64_t i = 0; i < 4; ++i)
        for (std::uint64_t j = 0; j < 4; ++j) {
            const Scalar a = f4.element(i), b = f4.element(j);
            CHECK(inc(a * b) == inc(a) * inc(b));
            CHECK(inc(a + b) == inc(a) + inc(b));
        }

    std::mt19937_64 rng(5);
    std::vector<Scalar> images;
    for (int i = 0; i < 100; ++i) {
        const Scalar a = random_fraction(rng, kt), b = random_fraction(rng, kt);
        CHECK(e(a * b) == e(a) * e(b));
        CHECK(e(a + b) == e(a) + e(b));
        CHECK(e(a - b) == e(a) - e(b));
        if (!b.is_zero()) CHECK(e(a / b) == e(a) / e(b));
    }
    std::vector<Scalar> seen;
    while (seen.size() < 100) {
        const Scalar a = random_fraction(rng, kt);
        if (std::find(seen.begin(), seen.end(), a) == seen.end()) seen.push_back(a);
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (std::size_t j = i + 1; j < seen.size(); ++j) CHECK(e(seen[i]) != e(seen[j]));
}

TEST_CASE("univariate roots") {
    const Field& k = Field::rational_functions(2);
    const Scalar t = k.variable();
    // (s + t)^2 (s + 1/t)
    const UPoly a(k, {t, k.one()}), b(k, {k.one() / t, k.one()});
    const auto r = roots(a * a * b);
    REQUIRE(r.has_value());
    REQUIRE(r->size() == 2);
    unsigned total = 0;
    for (const auto& [x, m] : *r) {
        total += m;
        CHECK((x == t || x == k.one() / t));
    }
    CHECK(total == 3);
    // s^2 + t has no rational root.
    const auto none = roots(UPoly(k, {t, k.zero(), k.one()}));
    REQUIRE(none.has_value());
    CHECK(none->empty());

    const Field& f3 = Field::prime(3);
    const auto fr = roots(UPoly(f3, {f3.from_int(2), f3.zero(), f3.one()}));  // s^2 - 1
    REQUIRE(fr.has_value());
    CHECK(fr->size() == 2);
}
