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

#include "radu/lie/radical.hpp"

#include <random>

#include "radu/errors.hpp"
#include "radu/lie/weights.hpp"
#include "radu/semilinear.hpp"

namespace radu {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::abelian: return "S1-abelian";
        case Strategy::derived: return "S2-derived";
        case Strategy::finite_scan: return "S3-finite-scan";
        case Strategy::split_weight: return "S4-split-weight";
        case Strategy::random_search: return "random-search";
    }
    return "unknown";
}

std::optional<Strategy> parse_strategy(const std::string& s) {
    for (Strategy x : {Strategy::abelian, Strategy::derived, Strategy::finite_scan, Strategy::split_weight,
                       Strategy::random_search})
        if (s == to_string(x) || s == to_string(x).substr(0, 2)) return x;
    return std::nullopt;
}

std::string to_string(Verdict v) { return v == Verdict::exact ? "exact" : "undecided"; }

namespace {

struct Search {
    enum class Outcome { found, none, inapplicable, undecided } outcome;
    std::optional<Subspace> ideal;
    std::string note;
};

Search found(Subspace s) { return {Search::Outcome::found, std::move(s), {}}; }
Search none() { return {Search::Outcome::none, std::nullopt, {}}; }
Search skip(std::string why) { return {Search::Outcome::inapplicable, std::nullopt, std::move(why)}; }
Search open(std::string why) { return {Search::Outcome::undecided, std::nullopt, std::move(why)}; }

/// spin(v) when it is a unipotent p-ideal.
std::optional<Subspace> unipotent_spin(const RestrictedLieAlgebra& q, const Vec& v) {
    Subspace s = spin_p_ideal(q, q.span({v}));
    if (is_unipotent(q, s)) return s;
    return std::nullopt;
}

Search try_abelian(const RestrictedLieAlgebra& q) {
    if (!q.is_abelian()) return skip("not abelian");
    if (q.dim() == 0) return none();
    Subspace u = rational_unipotent_part(SemilinearMap(q.p_matrix()));
    return u.is_zero() ? none() : found(std::move(u));
}

Search try_derived(const RestrictedLieAlgebra& q) {
    if (q.is_abelian()) return skip("abelian");
    Subspace d = spin_p_ideal(q, commutator(q, q.whole(), q.whole()));
    if (is_unipotent(q, d)) return found(std::move(d));
    return skip("p-closure of the derived algebra is not unipotent");
}

Search try_finite_scan(const RestrictedLieAlgebra& q) {
    if (!q.field().is_finite()) return skip("field is infinite");
    // A minimal unipotent p-ideal is abelian with zero p-map, so it contains
    // a projective point v with v^[p] = 0.
    for (const auto& v : projective_points(q.field(), q.dim())) {
        if (!is_zero(q.p_power(v))) continue;
        if (auto s = unipotent_spin(q, v)) return found(std::move(*s));
    }
    return none();
}

struct WeightFragment {
    WeightDecomposition w;
    Subspace center;
};

std::optional<WeightFragment> weight_fragment(const RestrictedLieAlgebra& q, std::string& why) {
    auto w = split_weight_decomposition(q);
    if (!w) {
        why = "no basis element with split semisimple adjoint action";
        return std::nullopt;
    }
    for (const auto& [c, s] : w->spaces) {
        if (c == 0 && !is_subalgebra(q, s)) {
            why = "weight space 0 is not a subalgebra";
            return std::nullopt;
        }
        if (c == 0 && !commutator(q, s, s).is_zero()) {
            why = "weight space 0 is not abelian";
            return std::nullopt;
        }
        if (c != 0 && s.dim() > 2) {
            why = "weight space " + std::to_string(c) + " has dimension " + std::to_string(s.dim());
            return std::nullopt;
        }
    }
    return WeightFragment{std::move(*w), center(q)};
}

/// Coordinates of z_j^[p] in the echelon basis of the center.
Matrix central_p_matrix(const RestrictedLieAlgebra& q, const Subspace& z) {
    std::vector<Vec> cols;
    for (const auto& b : z.basis()) cols.push_back(z.coordinates(q.p_power(b)));
    return Matrix::from_columns(q.field(), z.dim(), cols);
}

std::vector<Vec> elementary_constraints(const RestrictedLieAlgebra& q, const Vec& v) {
    std::vector<Vec> cons{q.p_power(v)};
    for (std::size_t i = 0; i < q.dim(); ++i) {
        const Vec w = q.ad_basis(i).apply(v);
        cons.push_back(q.bracket(v, w));
        cons.push_back(q.p_power(w));
    }
    return cons;
}

Search try_split_weight(const RestrictedLieAlgebra& q) {
    std::string why;
    const auto frag = weight_fragment(q, why);
    if (!frag) return skip(why);
    // Zero weight: a minimal ideal inside it is central.
    if (!frag->center.is_zero()) {
        const Subspace k = semilinear_kernel(Matrix::from_columns(
            q.field(), q.dim(), [&] {
                std::vector<Vec> cols;
                for (const auto& b : frag->center.basis()) cols.push_back(q.p_power(b));
                return cols;
            }()));
        if (!k.is_zero()) {
            Vec v = zero_vec(q.field(), q.dim());
            for (std::size_t j = 0; j < frag->center.dim(); ++j) axpy(v, k.basis()[0][j], frag->center.basis()[j]);
            return found(q.span({v}));
        }
    }
    for (const auto& [c, space] : frag->w.spaces) {
        if (c == 0) continue;
        const auto& b = space.basis();
        if (auto s = unipotent_spin(q, b.back())) return found(std::move(*s));
        if (b.size() == 1) continue;
        const auto G = line_constraint_gcd(q, b[0], b[1], [&](const Vec& v) { return elementary_constraints(q, v); });
        if (!G) return open("all constraints vanish on weight space " + std::to_string(c));
        if (G->degree() <= 0) continue;
        const auto rs = roots(*G);
        if (!rs) return open("root search budget exceeded on weight space " + std::to_string(c));
        for (const auto& [s, mult] : *rs)
            if (auto i = unipotent_spin(q, add(b[0], scale(s, b[1])))) return found(std::move(*i));
    }
    return none();
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    if (f.is_finite()) return f.element(rng() % f.order());
    const std::uint32_t p = f.characteristic();
    auto poly = [&](int deg) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p);
        return FpPoly(p, c);
    };
    FpPoly den = poly(static_cast<int>(rng() % 3));
    if (den.is_zero()) den = FpPoly::constant(p, 1);
    return make_rational(f, poly(static_cast<int>(rng() % 4)), den);
}

Search try_random(const RestrictedLieAlgebra& q, const RadicalOptions& opts, std::uint64_t salt) {
    std::mt19937_64 rng(opts.seed ^ (salt * 0x9e3779b97f4a7c15ULL));
    for (std::size_t a = 0; a < opts.random_attempts; ++a) {
        Vec v;
        for (std::size_t i = 0; i < q.dim(); ++i) v.push_back(rng() % 2 ? random_scalar(q.field(), rng) : q.field().zero());
        if (is_zero(v)) continue;
        if (!is_p_nilpotent(q, v)) continue;
        if (auto s = unipotent_spin(q, v)) return found(std::move(*s));
    }
    return open("no unipotent p-ideal among " + std::to_string(opts.random_attempts) + " random samples");
}

Search run(Strategy s, const RestrictedLieAlgebra& q, const RadicalOptions& opts, std::uint64_t salt) {
    switch (s) {
        case Strategy::abelian: return try_abelian(q);
        case Strategy::derived: return try_derived(q);
        case Strategy::finite_scan: return try_finite_scan(q);
        case Strategy::split_weight: return try_split_weight(q);
        case Strategy::random_search: return try_random(q, opts, salt);
    }
    return skip("unknown strategy");
}

}  // namespace

RadicalCertificate rad_p(const RestrictedLieAlgebra& g, const RadicalOptions& opts) {
    RadicalCertificate cert{g.zero_subspace(), Strategy::abelian, {}, Verdict::exact, {}};
    Subspace r = g.zero_subspace();
    for (std::size_t round = 0; round <= g.dim(); ++round) {
        const LieQuotient lq = quotient(g, r);
        const RestrictedLieAlgebra& q = lq.algebra;
        std::vector<Strategy> order;
        if (opts.force)
            order = {*opts.force};
        else
            order = {Strategy::abelian, Strategy::derived, Strategy::finite_scan, Strategy::split_weight,
                     Strategy::random_search};
        std::optional<Search> decided;
        Strategy used = order.back();
        for (Strategy s : order) {
            Search res = run(s, q, opts, round);
            if (res.outcome == Search::Outcome::inapplicable) {
                if (opts.force) cert.notes.push_back("forced " + to_string(s) + " does not apply: " + res.note);
                continue;
            }
            if (res.outcome == Search::Outcome::undecided) {
                cert.notes.push_back(to_string(s) + ": " + res.note);
                continue;
            }
            used = s;
            decided = std::move(res);
            break;
        }
        if (!decided) {
            cert.verdict = Verdict::undecided;
            cert.strategy = used;
            break;
        }
        if (decided->outcome == Search::Outcome::none) {
            cert.strategy = used;
            break;
        }
        std::vector<Vec> lifted = r.basis();
        for (const auto& v : decided->ideal->basis()) lifted.push_back(lq.data.section.apply(v));
        r = g.span(lifted);
        cert.trace.push_back({used, decided->ideal->basis(), q.labels(), r});
    }
    cert.radical = r;
    return cert;
}

Subspace replay(const RestrictedLieAlgebra& g, const RadicalCertificate& cert) {
    Subspace prev = g.zero_subspace();
    for (const auto& step : cert.trace) {
        const Subspace& cur = step.cumulative;
        if (!cur.contains(prev) || cur == prev) throw std::invalid_argument("trace step does not enlarge the radical");
        if (!is_p_ideal(g, cur)) throw std::invalid_argument("trace step " + g.format(cur) + " is not a p-ideal");
        if (!is_unipotent(g, cur)) throw std::invalid_argument("trace step " + g.format(cur) + " is not unipotent");
        prev = cur;
    }
    if (prev != cert.radical) throw std::invalid_argument("trace does not end at the reported radical");
    return prev;
}

namespace {

std::optional<ReductivityReport> geometric_split_weight(const RestrictedLieAlgebra& g) {
    std::string why;
    const auto frag = weight_fragment(g, why);
    if (!frag) return std::nullopt;
    const std::string crit = "split-weight (geometric)";
    if (!frag->center.is_zero() && determinant(central_p_matrix(g, frag->center)).is_zero())
        return ReductivityReport{Tristate::no, crit, "p-map on the center " + g.format(frag->center) +
                                                        " is singular, so it has a geometric p-nilpotent element"};
    for (const auto& [c, space] : frag->w.spaces) {
        if (c == 0) continue;
        const auto& b = space.basis();
        if (unipotent_spin(g, b.back()))
            return ReductivityReport{Tristate::no, crit, "weight vector " + g.format(b.back()) +
                                                            " spans a unipotent p-ideal"};
        if (b.size() == 1) continue;
        const auto G = line_constraint_gcd(g, b[0], b[1], [&](const Vec& v) { return elementary_constraints(g, v); });
        if (!G) return std::nullopt;
        if (G->degree() <= 0) continue;
        const auto rs = roots(*G);
        if (!rs) return std::nullopt;
        long total = 0;
        for (const auto& [s, mult] : *rs) total += mult;
        if (total != G->degree()) return std::nullopt;  // roots outside k could be candidates
        for (const auto& [s, mult] : *rs) {
            const Vec v = add(b[0], scale(s, b[1]));
            if (unipotent_spin(g, v))
                return ReductivityReport{Tristate::no, crit, "weight vector " + g.format(v) + " spans a unipotent p-ideal"};
        }
    }
    std::string detail = "ad(" + g.labels()[frag->w.h_index] + ") splits g into weight spaces";
    for (const auto& [c, s] : frag->w.spaces) detail += " " + std::to_string(c) + ":" + g.format(s);
    detail += "; no candidate vector over the algebraic closure spans a unipotent p-ideal";
    return ReductivityReport{Tristate::yes, crit, detail};
}

}  // namespace

ReductivityReport is_p_reductive(const RestrictedLieAlgebra& g, const ReductivityOptions& opts) {
    const std::size_t n = g.dim();
    if (n == 0) return {Tristate::yes, "zero algebra", "the zero algebra is p-reductive"};
    const RadicalCertificate cert = rad_p(g, opts.radical);
    if (!cert.radical.is_zero())
        return {Tristate::no, "rational radical", "radical over the base field is " + g.format(cert.radical)};
    if (g.field().is_perfect()) {
        if (cert.verdict == Verdict::exact)
            return {Tristate::yes, "perfect field",
                    "radical is 0 and the algebraic closure is separable over " + g.field().name()};
        return {Tristate::undecided, "perfect field", "radical search undecided"};
    }
    if (g.is_abelian()) {
        const std::size_t sr = stable_rank(SemilinearMap(g.p_matrix()));
        return {sr == n ? Tristate::yes : Tristate::no, "stable rank",
                "stable rank of the p-map is " + std::to_string(sr) + " of " + std::to_string(n)};
    }
    if (auto r = geometric_split_weight(g)) return *r;
    if (g.field().kind() == FieldKind::rational_function) {
        const Field& src = g.field();
        const std::string var = src.variables()[0] == "s" ? "r" : "s";
        const Field& tgt = Field::rational_functions(src.characteristic(), var);
        for (unsigned m = 1; m <= opts.max_inseparable_exponent; ++m) {
            const auto e = FieldEmbedding::inseparable(src, tgt, m);
            const RestrictedLieAlgebra h = base_change(g, e);
            const RadicalCertificate c = rad_p(h, opts.radical);
            if (!c.radical.is_zero())
                return {Tristate::no, "inseparable base change",
                        "after " + e.describe() + " the radical is " + h.format(c.radical)};
        }
    }
    return {Tristate::undecided, "none",
            "no complete criterion applies and base change up to exponent " +
                std::to_string(opts.max_inseparable_exponent) + " found no witness"};
}

}  // namespace radu
