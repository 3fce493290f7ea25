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

#include "radu/lie/analysis.hpp"

#include <cctype>
#include <set>

#include "radu/errors.hpp"
#include "radu/lie/weights.hpp"

namespace radu {

std::string to_string(Tristate t) {
    switch (t) {
        case Tristate::no: return "false";
        case Tristate::yes: return "true";
        case Tristate::undecided: return "undecided";
    }
    return "undecided";
}

namespace {

void check_ambient(const RestrictedLieAlgebra& g, const Subspace& s) {
    if (s.ambient() != g.dim()) throw DimensionMismatch("subspace ambient dimension differs from the algebra");
    if (&s.field() != &g.field()) throw FieldMismatch("subspace over " + s.field().name() + ", algebra over " +
                                                      g.field().name());
}

}  // namespace

Subspace spin_p_ideal(const RestrictedLieAlgebra& g, const Subspace& s) {
    check_ambient(g, s);
    Subspace cur = s;
    for (std::size_t round = 0; round <= g.dim(); ++round) {
        std::vector<Vec> gens = cur.basis();
        for (const auto& b : cur.basis()) {
            for (std::size_t i = 0; i < g.dim(); ++i) gens.push_back(g.ad_basis(i).apply(b));
            gens.push_back(g.p_power(b));
        }
        Subspace next = g.span(gens);
        if (next == cur) break;
        cur = std::move(next);
    }
    return cur;
}

Subspace spin_subalgebra(const RestrictedLieAlgebra& g, const Subspace& s) {
    check_ambient(g, s);
    Subspace cur = s;
    for (std::size_t round = 0; round <= g.dim(); ++round) {
        std::vector<Vec> gens = cur.basis();
        const auto& b = cur.basis();
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) gens.push_back(g.bracket(b[i], b[j]));
            gens.push_back(g.p_power(b[i]));
        }
        Subspace next = g.span(gens);
        if (next == cur) break;
        cur = std::move(next);
    }
    return cur;
}

bool is_subalgebra(const RestrictedLieAlgebra& g, const Subspace& s) {
    check_ambient(g, s);
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!s.contains(g.bracket(b[i], b[j]))) return false;
    return true;
}

bool is_restricted_subalgebra(const RestrictedLieAlgebra& g, const Subspace& s) {
    if (!is_subalgebra(g, s)) return false;
    for (const auto& b : s.basis())
        if (!s.contains(g.p_power(b))) return false;
    return true;
}

bool is_ideal(const RestrictedLieAlgebra& g, const Subspace& s) {
    check_ambient(g, s);
    for (const auto& b : s.basis())
        for (std::size_t i = 0; i < g.dim(); ++i)
            if (!s.contains(g.ad_basis(i).apply(b))) return false;
    return true;
}

bool is_p_ideal(const RestrictedLieAlgebra& g, const Subspace& s) {
    if (!is_ideal(g, s)) return false;
    for (const auto& b : s.basis())
        if (!s.contains(g.p_power(b))) return false;
    return true;
}

Subspace commutator(const RestrictedLieAlgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<Vec> gens;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) gens.push_back(g.bracket(x, y));
    return g.span(gens);
}

RSubspace::RSubspace(const RestrictedLieAlgebra& g, Subspace s)
    : s_(std::move(s)),
      subalgebra_(radu::is_subalgebra(g, s_)),
      ideal_(radu::is_ideal(g, s_)),
      p_ideal_(ideal_ && radu::is_p_ideal(g, s_)) {}

Subspace center(const RestrictedLieAlgebra& g) {
    const std::size_t n = g.dim();
    Matrix stacked(g.field(), n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked.at(i * n + r, c) = g.ad_basis(i).at(r, c);
    if (n == 0) return g.zero_subspace();
    return g.span(nullspace(stacked));
}

CharacteristicSeries characteristic_series(const RestrictedLieAlgebra& g) {
    CharacteristicSeries cs{center(g), {g.whole()}, {g.whole()}};
    for (;;) {
        Subspace next = commutator(g, cs.derived.back(), cs.derived.back());
        if (next == cs.derived.back()) break;
        cs.derived.push_back(std::move(next));
    }
    const Subspace whole = g.whole();
    for (;;) {
        Subspace next = commutator(g, whole, cs.lower_central.back());
        if (next == cs.lower_central.back()) break;
        cs.lower_central.push_back(std::move(next));
    }
    cs.solvable = cs.derived.back().is_zero();
    cs.nilpotent = cs.lower_central.back().is_zero();
    if (cs.nilpotent) cs.nilpotency_class = cs.lower_central.size() - 1;
    return cs;
}

bool is_p_nilpotent(const RestrictedLieAlgebra& g, const Vec& x) {
    for (const auto& c : x)
        if (!c.field().is_field()) throw UnsupportedKind("p-nilpotency test needs field coefficients");
    Vec y = x;
    for (std::size_t i = 0; i < g.dim() && !is_zero(y); ++i) y = g.p_power(y);
    return is_zero(y);
}

bool is_unipotent(const RestrictedLieAlgebra& g, const Subspace& s) {
    if (!is_restricted_subalgebra(g, s)) throw NotAPIdeal(g.format(s) + " is not a restricted subalgebra");
    Subspace cur = s;
    for (std::size_t step = 0; step <= g.dim() && !cur.is_zero(); ++step) {
        std::vector<Vec> gens;
        const auto& b = cur.basis();
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = i + 1; j < b.size(); ++j) gens.push_back(g.bracket(b[i], b[j]));
            gens.push_back(g.p_power(b[i]));
        }
        Subspace next = g.span(gens);
        if (next == cur) return false;
        cur = std::move(next);
    }
    return cur.is_zero();
}

GenericPPower generic_p_power(const RestrictedLieAlgebra& g) {
    std::vector<std::string> vars;
    std::set<std::string> seen(g.field().variables().begin(), g.field().variables().end());
    bool lower_ok = true;
    for (const auto& l : g.labels()) {
        std::string v;
        for (char c : l) v += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        const bool ident = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_') &&
                           std::all_of(v.begin(), v.end(),
                                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
        if (!ident || !seen.insert(v).second) {
            lower_ok = false;
            break;
        }
        vars.push_back(v);
    }
    if (!lower_ok) {
        vars.clear();
        for (std::size_t i = 0; i < g.dim(); ++i) vars.push_back("x" + std::to_string(i + 1));
    }
    if (vars.empty()) return {&g.field(), {}, {}};
    const Field& ring = Field::coordinate_ring(g.field(), vars);
    Vec x;
    for (std::size_t i = 0; i < g.dim(); ++i) x.push_back(ring.variable(i));
    return {&ring, vars, g.p_power(x)};
}

LieQuotient quotient(const RestrictedLieAlgebra& g, const Subspace& ideal) {
    check_ambient(g, ideal);
    for (const auto& b : ideal.basis()) {
        for (std::size_t i = 0; i < g.dim(); ++i) {
            const Vec c = g.bracket(b, g.basis(i));
            if (!ideal.contains(c))
                throw NotAPIdeal("[" + g.format(b) + "," + g.labels()[i] + "] = " + g.format(c) + " is not in " +
                                 g.format(ideal));
        }
        const Vec pb = g.p_power(b);
        if (!ideal.contains(pb))
            throw NotAPIdeal("(" + g.format(b) + ")^[p] = " + g.format(pb) + " is not in " + g.format(ideal));
    }
    QuotientData q = radu::quotient(ideal);
    const std::size_t m = q.complement.size();
    std::vector<std::string> labels;
    for (auto c : q.complement) labels.push_back(g.labels()[c]);
    StructureConstants sc = StructureConstants::zero(g.field(), labels);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b)
            sc.brackets[a * m + b] = q.projection.apply(g.basis_bracket(q.complement[a], q.complement[b]));
        sc.ppowers[a] = q.projection.apply(g.basis_ppower(q.complement[a]));
    }
    return {RestrictedLieAlgebra::trusted(std::move(sc)), std::move(q)};
}

LieSubalgebra subalgebra(const RestrictedLieAlgebra& g, const Subspace& s) {
    if (!is_restricted_subalgebra(g, s)) throw NotAPIdeal(g.format(s) + " is not a restricted subalgebra");
    const auto& b = s.basis();
    const std::size_t d = b.size();
    std::vector<std::string> labels;
    std::set<std::string> used;
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t nonzero = 0, at = 0;
        for (std::size_t k = 0; k < b[i].size(); ++k)
            if (!b[i][k].is_zero()) ++nonzero, at = k;
        std::string l = (nonzero == 1 && b[i][at].is_one()) ? g.labels()[at] : "b" + std::to_string(i + 1);
        while (!used.insert(l).second) l += "_";
        labels.push_back(l);
    }
    StructureConstants sc = StructureConstants::zero(g.field(), labels);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) sc.brackets[i * d + j] = s.coordinates(g.bracket(b[i], b[j]));
        sc.ppowers[i] = s.coordinates(g.p_power(b[i]));
    }
    return {RestrictedLieAlgebra(std::move(sc)), Matrix::from_columns(g.field(), g.dim(), b)};
}

std::string SeriesStep::describe() const {
    switch (kind) {
        case Kind::alpha: return "alpha-type";
        case Kind::mu: return "mu-form(" + scalar->to_string() + ")";
        case Kind::unclassified: break;
    }
    return "unclassified(dim " + std::to_string(quotient_dim) + ")";
}

std::vector<SeriesStep> verify_subnormal_series(const RestrictedLieAlgebra& g, const std::vector<Subspace>& chain) {
    if (chain.empty() || !chain.front().is_zero() || !chain.back().is_whole())
        throw NotAPIdeal("a series must run from 0 to the whole algebra");
    for (const auto& s : chain) check_ambient(g, s);
    std::vector<SeriesStep> out;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const Subspace& lo = chain[k];
        const Subspace& hi = chain[k + 1];
        if (!hi.contains(lo)) throw NotAPIdeal(g.format(lo) + " is not contained in " + g.format(hi));
        if (!is_restricted_subalgebra(g, hi)) throw NotAPIdeal(g.format(hi) + " is not a restricted subalgebra");
        for (const auto& y : hi.basis())
            for (const auto& x : lo.basis()) {
                const Vec c = g.bracket(y, x);
                if (!lo.contains(c))
                    throw NotAPIdeal("[" + g.format(y) + "," + g.format(x) + "] = " + g.format(c) + " is not in " +
                                     g.format(lo));
            }
        for (const auto& x : lo.basis()) {
            const Vec px = g.p_power(x);
            if (!lo.contains(px))
                throw NotAPIdeal("(" + g.format(x) + ")^[p] = " + g.format(px) + " is not in " + g.format(lo));
        }
        SeriesStep step;
        step.quotient_dim = hi.dim() - lo.dim();
        if (step.quotient_dim == 1) {
            Vec v = zero_vec(g.field(), g.dim());
            for (const auto& y : hi.basis())
                if (!lo.contains(y)) {
                    v = lo.reduce(y);
                    break;
                }
            std::size_t lead = 0;
            while (v[lead].is_zero()) ++lead;
            v = scale(v[lead].inverse(), v);
            const Vec r = lo.reduce(g.p_power(v));
            const Scalar c = r[lead];
            if (c.is_zero()) {
                step.kind = SeriesStep::Kind::alpha;
            } else {
                step.kind = SeriesStep::Kind::mu;
                step.scalar = c;
            }
        }
        out.push_back(std::move(step));
    }
    return out;
}

namespace {

bool line_is_p_ideal(const RestrictedLieAlgebra& g, const Vec& v) { return is_p_ideal(g, g.span({v})); }

}  // namespace

std::optional<std::vector<Subspace>> one_dim_p_ideals(const RestrictedLieAlgebra& g) {
    std::vector<Subspace> out;
    const std::size_t n = g.dim();
    if (n == 0) return out;
    if (g.field().is_finite()) {
        for (const auto& v : projective_points(g.field(), n))
            if (line_is_p_ideal(g, v)) out.push_back(g.span({v}));
        return out;
    }
    if (n == 1) return std::vector<Subspace>{g.whole()};
    // A line ideal is ad(h)-stable, so it lies in one weight space.
    const auto w = split_weight_decomposition(g);
    if (!w) return std::nullopt;
    for (const auto& [c, space] : w->spaces) {
        const auto& b = space.basis();
        if (b.size() == 1) {
            if (line_is_p_ideal(g, b[0])) out.push_back(space);
            continue;
        }
        if (b.size() > 2) return std::nullopt;
        if (line_is_p_ideal(g, b[1])) out.push_back(g.span({b[1]}));
        const auto G = line_constraint_gcd(g, b[0], b[1], [&](const Vec& v) {
            std::vector<Vec> cons{wedge(v, g.p_power(v))};
            for (std::size_t i = 0; i < n; ++i) cons.push_back(wedge(v, g.ad_basis(i).apply(v)));
            return cons;
        });
        if (!G) return std::nullopt;
        if (G->degree() == 0) continue;
        const auto rs = roots(*G);
        if (!rs) return std::nullopt;
        for (const auto& [s, mult] : *rs) {
            const Vec v = add(b[0], scale(s, b[1]));
            if (line_is_p_ideal(g, v)) out.push_back(g.span({v}));
        }
    }
    return out;
}

bool is_mult_type(const RestrictedLieAlgebra& g) {
    if (g.dim() == 0) return true;
    return g.is_abelian() && !determinant(g.p_matrix()).is_zero();
}

RestrictedLieAlgebra base_change(const RestrictedLieAlgebra& g, const FieldEmbedding& e) {
    if (&e.source() != &g.field())
        throw FieldMismatch("embedding source " + e.source().name() + " differs from " + g.field().name());
    StructureConstants sc = StructureConstants::zero(e.target(), g.labels());
    for (std::size_t i = 0; i < g.constants().brackets.size(); ++i) sc.brackets[i] = e(g.constants().brackets[i]);
    for (std::size_t i = 0; i < g.dim(); ++i) sc.ppowers[i] = e(g.basis_ppower(i));
    return RestrictedLieAlgebra(std::move(sc));
}

Subspace base_change(const Subspace& s, const FieldEmbedding& e) {
    std::vector<Vec> b;
    for (const auto& v : s.basis()) b.push_back(e(v));
    return Subspace::span(e.target(), s.ambient(), b);
}

std::vector<Vec> projective_points(const Field& f, std::size_t n) {
    if (!f.is_finite()) throw UnsupportedKind("projective enumeration over " + f.name());
    const std::uint64_t q = f.order();
    std::vector<Vec> out;
    for (std::size_t lead = 0; lead < n; ++lead) {
        const std::size_t tail = n - lead - 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < tail; ++i) count *= q;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Vec v = zero_vec(f, n);
            v[lead] = f.one();
            std::uint64_t r = idx;
            for (std::size_t k = n; k-- > lead + 1;) {
                v[k] = f.element(r % q);
                r /= q;
            }
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace radu
