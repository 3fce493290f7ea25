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
#include "radu/gallery/lie.hpp"
#include "radu/lie/analysis.hpp"
#include "radu/lie/radical.hpp"
#include "radu/oracle/oracle.hpp"

using namespace radu;

TEST_CASE("subspace enumeration matches Gaussian binomials") {
    CHECK(oracle::all_subspaces(Field::prime(2), 3).size() == 16);
    CHECK(oracle::all_subspaces(Field::prime(2), 4).size() == 67);
    CHECK(oracle::all_subspaces(Field::prime(3), 2).size() == 6);
    CHECK(oracle::all_subspaces(Field::galois(2, 2), 2).size() == 7);
    const auto subs = oracle::all_subspaces(Field::prime(3), 3);
    CHECK(subs.size() == 28);
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = i + 1; j < subs.size(); ++j) CHECK(subs[i] != subs[j]);
}

TEST_CASE("independent p-power agrees with the Jacobson implementation") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u}) {
        const auto g = gallery::imperfect_G(p).algebra;
        const Field& f = g.field();
        for (int k = 0; k < 30; ++k) {
            Vec x;
            for (int i = 0; i < 3; ++i) {
                const std::uint32_t c = static_cast<std::uint32_t>(rng() % p);
                x.push_back(f.from_int(c) + (rng() % 2 ? f.variable() * f.from_int(rng() % p) : f.zero()));
            }
            CHECK(oracle::p_power(g, x) == g.p_power(x));
        }
    }
    const auto sl = gallery::sl2_kernel_char2(Field::galois(2, 3));
    for (const auto& v : oracle::all_vectors(sl.field(), 3)) CHECK(oracle::p_power(sl, v) == sl.p_power(v));
}

TEST_CASE("enumeration yields valid algebras only") {
    const auto two = oracle::enumerate_algebras(Field::prime(2), 2, 100000);
    CHECK(two.size() > 4);
    for (const auto& g : two) CHECK(validate(g.constants()).ok);
    const auto capped = oracle::enumerate_algebras(Field::prime(2), 3, 50);
    CHECK(capped.size() == 50);
    const auto three = oracle::enumerate_algebras(Field::prime(3), 2, 100000);
    for (const auto& g : three) CHECK(validate(g.constants()).ok);
}

TEST_CASE("oracle radical on fixtures") {
    const auto sl = gallery::sl2_kernel_char2();
    CHECK(oracle::radical(sl).is_zero());
    CHECK_FALSE(oracle::is_unipotent(sl, sl.whole()));
    CHECK(oracle::is_unipotent(sl, sl.span({sl.basis(0)})));
    const Field& f2 = Field::prime(2);
    const auto am = gallery::direct_sum(gallery::alpha_lie(f2, "a"), gallery::mu_lie(f2, "m"));
    CHECK(oracle::radical(am) == am.span({am.basis(0)}));
    CHECK(oracle::radical(gallery::torus_lie(f2, 3)).is_zero());
}

TEST_CASE("oracle and rad_p agree on two-dimensional algebras over F_2 and F_3") {
    for (std::uint32_t p : {2u, 3u})
        for (const auto& g : oracle::enumerate_algebras(Field::prime(p), 2, 100000)) {
            const auto cert = rad_p(g);
            CHECK(cert.verdict == Verdict::exact);
            CHECK(cert.radical == oracle::radical(g));
        }
}
