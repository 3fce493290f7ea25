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

#include "radu/gallery/fixtures.hpp"

#include <random>
#include <sstream>

#include "radu/embedding.hpp"
#include "radu/errors.hpp"
#include "radu/gallery/catalog.hpp"
#include "radu/hopf/enveloping.hpp"
#include "radu/hopf/subgroups.hpp"
#include "radu/hopf/text.hpp"
#include "radu/lie/radical.hpp"

namespace radu::gallery {

namespace {

const char* const kRef = "reference-example";
const char* const kOracle = "independent-oracle";
const char* const kDef = "by-definition";

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string flag(bool b) { return b ? "true" : "false"; }

Subspace lie_subspace(const RestrictedLieAlgebra& g, const std::string& arg) {
    if (arg == "0") return g.zero_subspace();
    if (arg == "all") return g.whole();
    std::vector<Vec> vs;
    for (const auto& part : split(arg, ',')) vs.push_back(parse_combination(g.field(), g.labels(), part));
    return g.span(vs);
}

Subspace hopf_ideal(const HopfAlgebra& h, const std::string& arg) {
    if (arg == "0") return Subspace(h.field(), h.dim());
    if (arg == "augmentation") return h.augmentation_ideal();
    std::vector<Vec> gens;
    for (const auto& part : split(arg, ',')) gens.push_back(parse_element(h.algebra(), part));
    return h.algebra().ideal_generated(gens);
}

// The algebra a radical or reductivity check refers to.
RestrictedLieAlgebra lie_target(const RestrictedLieAlgebra& g, const std::string& arg) {
    if (arg.empty()) return g;
    if (arg.rfind("sub:", 0) == 0) return subalgebra(g, lie_subspace(g, arg.substr(4))).algebra;
    if (arg.rfind("quot:", 0) == 0) return quotient(g, lie_subspace(g, arg.substr(5))).algebra;
    throw std::invalid_argument("target must be empty, sub:S or quot:S");
}

Scalar random_element(std::mt19937_64& rng, const Field& f) {
    const std::uint32_t p = f.characteristic();
    std::vector<std::uint32_t> num(rng() % 4 + 1), den(rng() % 3 + 1);
    for (auto& x : num) x = static_cast<std::uint32_t>(rng() % p);
    for (auto& x : den) x = static_cast<std::uint32_t>(rng() % p);
    FpPoly d(p, den);
    if (d.is_zero()) d = FpPoly::constant(p, 1);
    return make_rational(f, FpPoly(p, num), d);
}

std::string evaluate_lie(const AlgebraWithRep& obj, const std::string& check, const std::string& arg) {
    const RestrictedLieAlgebra& g = obj.algebra;
    if (check == "validate") {
        const auto r = validate(g.constants());
        return r.ok ? "pass" : "fail:" + r.failed_check;
    }
    if (check == "representation") {
        std::vector<Matrix> rho = obj.representation;
        if (arg == "identity")
            for (auto& m : rho) m = Matrix::identity(g.field(), m.rows());
        const auto r = verify_restricted_rep(g, rho);
        return r.ok ? "pass" : "fail:" + r.failed_check;
    }
    if (check == "center") return g.format(center(g));
    if (check == "solvable") return flag(characteristic_series(g).solvable);
    if (check == "nilpotent") return flag(characteristic_series(g).nilpotent);
    if (check == "nilpotency-class") return std::to_string(characteristic_series(g).nilpotency_class);
    if (check == "series") {
        std::vector<Subspace> chain;
        for (const auto& part : split(arg, '|')) chain.push_back(lie_subspace(g, part));
        std::string s;
        for (const auto& step : verify_subnormal_series(g, chain)) s += (s.empty() ? "" : ", ") + step.describe();
        return s;
    }
    if (check == "radical") {
        const auto h = lie_target(g, arg);
        return h.format(rad_p(h).radical);
    }
    if (check == "radical-strategy") return to_string(rad_p(lie_target(g, arg)).strategy);
    if (check == "radical-verdict") return to_string(rad_p(lie_target(g, arg)).verdict);
    if (check == "p-reductive") return to_string(is_p_reductive(lie_target(g, arg)).verdict);
    if (check == "unipotent") return flag(is_unipotent(g, lie_subspace(g, arg)));
    if (check == "spin") return g.format(spin_subalgebra(g, lie_subspace(g, arg)));
    if (check == "mult-type") return flag(is_mult_type(g));
    if (check == "p-nilpotent-sample") {
        // random nonzero elements; reports how many are p-nilpotent
        std::mt19937_64 rng(20261016);
        const unsigned long count = std::stoul(arg);
        unsigned long hits = 0;
        for (unsigned long k = 0; k < count;) {
            Vec x;
            for (std::size_t i = 0; i < g.dim(); ++i) x.push_back(random_element(rng, g.field()));
            if (is_zero(x)) continue;
            ++k;
            if (is_p_nilpotent(g, x)) ++hits;
        }
        return std::to_string(hits);
    }
    if (check == "inseparable-p-nilpotent") {
        // argument: m;element, with the element written over F_p(s) after t -> s^(p^m)
        const auto parts = split(arg, ';');
        if (parts.size() != 2) throw std::invalid_argument("expected m;element");
        const Field& target = Field::rational_functions(g.field().characteristic(), "s");
        const auto e = FieldEmbedding::inseparable(g.field(), target, static_cast<unsigned>(std::stoul(parts[0])));
        const auto h = base_change(g, e);
        return flag(is_p_nilpotent(h, parse_combination(target, h.labels(), parts[1])));
    }
    throw std::invalid_argument("unknown Lie check '" + check + "'");
}

std::string evaluate_hopf(const std::string& target, const HopfAlgebra& h, const std::string& check,
                          const std::string& arg) {
    if (check == "validate-hopf") {
        const auto r = validate_hopf(h.data());
        return r.ok ? "pass" : "fail:" + r.failed_check;
    }
    if (check == "dimension") return std::to_string(h.dim());
    if (check == "commutative") return flag(h.is_commutative());
    if (check == "cocommutative") return flag(h.is_cocommutative());
    if (check == "frobenius-kernel") return h.format(frobenius_kernel(h, static_cast<unsigned>(std::stoul(arg))));
    if (check == "subgroup-ideal") {
        const auto r = is_subgroup_ideal(h, hopf_ideal(h, arg));
        return r.ok ? "true" : "false:" + r.failed;
    }
    if (check == "normal") return flag(is_normal(h, hopf_ideal(h, arg)));
    if (check == "union" || check == "union-forced") {
        std::vector<Subspace> family;
        for (const auto& part : split(arg, '|')) family.push_back(hopf_ideal(h, part));
        try {
            const auto u = schematic_union(h, family, check == "union-forced");
            return h.format(u.ideal) + (u.check.ok ? "" : " not-subgroup:" + u.check.failed);
        } catch (const NonDirectedFamily& e) {
            return "refused:" + std::to_string(e.first()) + "," + std::to_string(e.second());
        }
    }
    if (check == "normal-from-lie" || check == "ideal-from-lie") {
        const auto inner = call_arguments(target, "dual-u");
        if (!inner) throw std::invalid_argument(check + " applies to dual-u(...) targets");
        const auto g = lie_by_name(inner->front());
        const auto u = restricted_enveloping_algebra(g->algebra);
        const Subspace ideal = subgroup_ideal_from_p_subalgebra(u, h, g->algebra, lie_subspace(g->algebra, arg));
        if (check == "ideal-from-lie") return ideal == h.augmentation_ideal() ? "augmentation" : h.format(ideal);
        return flag(is_normal(h, ideal));
    }
    throw std::invalid_argument("unknown Hopf check '" + check + "'");
}

}  // namespace

std::string evaluate(const std::string& target, bool hopf, const std::string& check, const std::string& argument) {
    if (hopf) {
        const auto h = hopf_by_name(target);
        if (!h) throw std::invalid_argument("unknown Hopf gallery name '" + target + "'");
        return evaluate_hopf(target, *h, check, argument);
    }
    const auto g = lie_by_name(target);
    if (!g) throw std::invalid_argument("unknown Lie gallery name '" + target + "'");
    return evaluate_lie(*g, check, argument);
}

std::vector<RowOutcome> run_fixture(const Fixture& fx) {
    std::vector<RowOutcome> out;
    for (const auto& row : fx.rows) {
        RowOutcome o{row, "", false};
        try {
            o.actual = evaluate(fx.target, fx.hopf, row.check, row.argument);
            o.pass = o.actual == row.expected;
        } catch (const std::exception& e) {
            o.actual = std::string("error: ") + e.what();
        }
        out.push_back(std::move(o));
    }
    return out;
}

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> table = {
        {"G-imperfect@p=2",
         false,
         {
             {"validate", "", "pass", kRef, "structure constants"},
             {"representation", "", "pass", kRef, "faithful restricted 2x2 representation"},
             {"representation", "identity", "fail:bracket", kDef, "identity matrices lose the bracket"},
             {"center", "", "<X>", kRef, "center"},
             {"solvable", "", "true", kRef, "solvable"},
             {"nilpotent", "", "false", kRef, "not nilpotent"},
             {"series", "0|X|X,Y|all", "mu-form(1), alpha-type, mu-form(1)", kRef, "composition factors mu, alpha, mu"},
             {"radical", "", "<>", kRef, "trivial unipotent radical"},
             {"radical-verdict", "", "exact", kDef, "radical certified"},
             {"p-reductive", "", "true", kRef, "p-reductive"},
             {"radical", "sub:X,Y", "<>", kRef, "normal subgroup has trivial radical over k"},
             {"p-reductive", "sub:X,Y", "false", kRef, "normal subgroup is not p-reductive"},
             {"radical", "quot:X", "<Y>", kRef, "quotient by the center has a unipotent radical"},
             {"mult-type", "", "false", kDef, "not abelian"},
             {"unipotent", "all", "false", kDef, "Z is semisimple"},
             {"p-nilpotent-sample", "1000", "0", kRef, "no nonzero p-nilpotent elements"},
             {"inseparable-p-nilpotent", "1;s*X+Y", "true", kOracle, "p-nilpotent after adjoining sqrt(t)"},
         }},
        {"G-imperfect@p=3",
         false,
         {
             {"validate", "", "pass", kRef, "structure constants"},
             {"representation", "", "pass", kRef, "faithful restricted 3x3 representation"},
             {"center", "", "<X>", kRef, "center"},
             {"series", "0|X|X,Y|all", "mu-form(1), alpha-type, mu-form(1)", kRef, "composition factors mu, alpha, mu"},
             {"radical", "", "<>", kRef, "trivial unipotent radical"},
         }},
        {"sl2-kernel@p=2",
         false,
         {
             {"validate", "", "pass", kRef, "Lie algebra of the first Frobenius kernel of SL2"},
             {"nilpotent", "", "true", kRef, "nilpotent"},
             {"nilpotency-class", "", "2", kOracle, "class two"},
             {"unipotent", "all", "false", kRef, "not unipotent"},
             {"center", "", "<h>", kRef, "center is the torus"},
             {"unipotent", "e", "true", kRef, "root subgroup U+ is unipotent"},
             {"unipotent", "f", "true", kRef, "root subgroup U- is unipotent"},
             {"spin", "e,f", "<e, h, f>", kRef, "generated by the two root subgroups"},
             {"radical", "", "<>", kRef, "no largest unipotent subgroup survives as a normal one"},
         }},
        {"alpha@2", false, {{"unipotent", "all", "true", kDef, "alpha_p is unipotent"}, {"mult-type", "", "false", kDef, "not a torus"}}},
        {"mu@3", false, {{"unipotent", "all", "false", kDef, "mu_p is not unipotent"}, {"mult-type", "", "true", kDef, "multiplicative type"}}},
        {"product(alpha@2,mu@2)",
         false,
         {{"radical", "", "<v>", kOracle, "radical is the alpha factor"},
          {"radical-strategy", "", "S1-abelian", kDef, "abelian strategy applies"}}},
        {"alpha2",
         true,
         {{"validate-hopf", "", "pass", kDef, "primitive generator"},
          {"frobenius-kernel", "1", "<>", kDef, "height one"}}},
        {"mu2",
         true,
         {{"validate-hopf", "", "pass", kDef, "grouplike generator"},
          {"frobenius-kernel", "1", "<>", kDef, "height one"}}},
        {"alpha4",
         true,
         {{"validate-hopf", "", "pass", kDef, "primitive generator"},
          {"frobenius-kernel", "1", "<x2, x3>", kOracle, "first Frobenius kernel is alpha_2"},
          {"frobenius-kernel", "2", "<>", kOracle, "second Frobenius kernel is everything"},
          {"union", "x2|0", "<>", kOracle, "union of the Frobenius chain"}}},
        {"product(alpha2,mu2)",
         true,
         {{"validate-hopf", "", "pass", kDef, "tensor product"},
          {"subgroup-ideal", "x*g+x", "false:comultiplication", kOracle, "union of alpha_2 and mu_2 is not a subgroup"},
          {"subgroup-ideal", "0", "true", kDef, "whole group"},
          {"subgroup-ideal", "augmentation", "true", kDef, "trivial subgroup"},
          {"union", "g+one|x", "refused:0,1", kOracle, "non-directed family"},
          {"union-forced", "g+one|x", "<x+x_g> not-subgroup:comultiplication", kOracle, "forced non-directed union"}}},
        {"dual-u(G-imperfect@p=2)",
         true,
         {{"validate-hopf", "", "pass", kOracle, "coordinate ring of the height-one group"},
          {"dimension", "", "8", kDef, "p^dim"},
          {"commutative", "", "true", kDef, "dual of a cocommutative algebra"},
          {"frobenius-kernel", "1", "<>", kOracle, "height one"},
          {"normal-from-lie", "X,Y", "true", kRef, "N is normal"},
          {"normal-from-lie", "Z", "false", kOracle, "<Z> is not an ideal"},
          {"ideal-from-lie", "0", "augmentation", kDef, "trivial subgroup"}}},
        {"dual-u(sl2-kernel@p=2)",
         true,
         {{"validate-hopf", "", "pass", kOracle, "coordinate ring of the height-one group"},
          {"frobenius-kernel", "1", "<>", kOracle, "height one"},
          {"normal-from-lie", "h", "true", kOracle, "the center is normal"},
          {"normal-from-lie", "e", "false", kOracle, "a root subgroup is not normal"}}},
    };
    return table;
}

}  // namespace radu::gallery
