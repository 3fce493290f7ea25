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

#include "radu/oracle/oracle.hpp"

#include <set>
#include <stdexcept>

#include "radu/hopf/enveloping.hpp"

namespace radu::oracle {

namespace {

void require_finite(const Field& f) {
    if (!f.is_finite()) throw std::invalid_argument("the brute-force oracle needs a finite field");
}

std::string key(const Vec& v) {
    std::string s;
    for (const auto& x : v) s += std::to_string(x.field().index_of(x)) + ",";
    return s;
}

Matrix ad_matrix(const StructureConstants& sc, const Vec& x) {
    const std::size_t n = sc.dim();
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(bracket(sc, x, unit_vec(*sc.field, n, j)));
    return Matrix::from_columns(*sc.field, n, cols);
}

}  // namespace

std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
    require_finite(f);
    const std::uint64_t q = f.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= q;
    std::vector<Vec> out;
    out.reserve(total);
    for (std::uint64_t k = 0; k < total; ++k) {
        Vec v;
        std::uint64_t x = k;
        for (std::size_t i = 0; i < n; ++i, x /= q) v.push_back(f.element(x % q));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> elements(const Subspace& s) {
    std::vector<Vec> out;
    for (const auto& c : all_vectors(s.field(), s.dim())) {
        Vec v = zero_vec(s.field(), s.ambient());
        for (std::size_t i = 0; i < c.size(); ++i) axpy(v, c[i], s.basis()[i]);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Subspace> all_subspaces(const Field& f, std::size_t n) {
    require_finite(f);
    std::vector<Subspace> out;
    // pivot sets as bitmasks; free entries sit right of each pivot in non-pivot columns
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> piv;
        for (std::size_t c = 0; c < n; ++c)
            if (mask >> c & 1) piv.push_back(c);
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < piv.size(); ++r)
            for (std::size_t c = piv[r] + 1; c < n; ++c)
                if (!(mask >> c & 1)) free.emplace_back(r, c);
        for (const auto& fill : all_vectors(f, free.size())) {
            std::vector<Vec> rows;
            for (auto p : piv) rows.push_back(unit_vec(f, n, p));
            for (std::size_t k = 0; k < free.size(); ++k) rows[free[k].first][free[k].second] = fill[k];
            out.push_back(Subspace::span(f, n, rows));
        }
    }
    return out;
}

Vec bracket(const StructureConstants& sc, const Vec& x, const Vec& y) {
    const std::size_t n = sc.dim();
    Vec r = zero_vec(*sc.field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar c = x[i] * y[j];
            if (!c.is_zero()) axpy(r, c, sc.brackets[i * n + j]);
        }
    return r;
}

Vec p_power(const RestrictedLieAlgebra& g, const Vec& x) {
    const StructureConstants& sc = g.constants();
    const std::size_t n = g.dim();
    if (g.field().characteristic() == 2) {
        Vec r = zero_vec(g.field(), n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            axpy(r, x[i] * x[i], sc.ppowers[i]);
            for (std::size_t j = i + 1; j < n; ++j)
                if (!x[j].is_zero()) axpy(r, x[i] * x[j], sc.brackets[i * n + j]);
        }
        return r;
    }
    const auto u = restricted_enveloping_algebra(g, 1u << 20);
    const Vec power = u.hopf.algebra().power(u.embed(x), g.field().characteristic());
    Vec r = zero_vec(g.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> a(n, 0);
        a[i] = 1;
        r[i] = power[u.index_of(a)];
    }
    return r;
}

bool is_p_nilpotent(const RestrictedLieAlgebra& g, const Vec& x) {
    std::set<std::string> seen;
    Vec cur = x;
    while (!is_zero(cur)) {
        if (!seen.insert(key(cur)).second) return false;
        cur = p_power(g, cur);
    }
    return true;
}

bool is_restricted_subalgebra(const RestrictedLieAlgebra& g, const Subspace& s) {
    for (const auto& a : s.basis())
        for (const auto& b : s.basis())
            if (!s.contains(bracket(g.constants(), a, b))) return false;
    for (const auto& v : elements(s))
        if (!s.contains(p_power(g, v))) return false;
    return true;
}

bool is_p_ideal(const RestrictedLieAlgebra& g, const Subspace& s) {
    for (const auto& b : s.basis())
        for (std::size_t i = 0; i < g.dim(); ++i)
            if (!s.contains(bracket(g.constants(), unit_vec(g.field(), g.dim(), i), b))) return false;
    for (const auto& v : elements(s))
        if (!s.contains(p_power(g, v))) return false;
    return true;
}

bool is_unipotent(const RestrictedLieAlgebra& g, const Subspace& s) {
    for (const auto& v : elements(s))
        if (!is_p_nilpotent(g, v)) return false;
    return true;
}

Subspace p_ideal_closure(const RestrictedLieAlgebra& g, const Subspace& s) {
    Subspace cur = s;
    for (;;) {
        Subspace next = cur;
        for (const auto& b : cur.basis())
            for (std::size_t i = 0; i < g.dim(); ++i)
                next = next.with(bracket(g.constants(), unit_vec(g.field(), g.dim(), i), b));
        for (const auto& v : elements(cur)) next = next.with(p_power(g, v));
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

Subspace radical(const RestrictedLieAlgebra& g) {
    std::vector<Subspace> found;
    for (const auto& s : all_subspaces(g.field(), g.dim()))
        if (is_p_ideal(g, s) && is_unipotent(g, s)) found.push_back(s);
    const Subspace* best = &found.front();  // the zero subspace always qualifies
    for (const auto& s : found)
        if (s.dim() > best->dim()) best = &s;
    for (const auto& s : found)
        if (!best->contains(s)) throw std::logic_error("unipotent p-ideals have no largest member");
    return *best;
}

std::vector<Subspace> unipotent_subalgebras(const RestrictedLieAlgebra& g) {
    std::vector<Subspace> out;
    for (const auto& s : all_subspaces(g.field(), g.dim()))
        if (is_restricted_subalgebra(g, s) && is_unipotent(g, s)) out.push_back(s);
    return out;
}

bool valid_restricted(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    const Field& f = *sc.field;
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_zero(sc.brackets[i * n + i])) return false;
        for (std::size_t j = 0; j < n; ++j)
            if (add(sc.brackets[i * n + j], sc.brackets[j * n + i]) != zero_vec(f, n)) return false;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec ei = unit_vec(f, n, i), ej = unit_vec(f, n, j), ek = unit_vec(f, n, k);
                Vec s = bracket(sc, ei, bracket(sc, ej, ek));
                s = add(s, bracket(sc, ej, bracket(sc, ek, ei)));
                s = add(s, bracket(sc, ek, bracket(sc, ei, ej)));
                if (!is_zero(s)) return false;
            }
    for (std::size_t i = 0; i < n; ++i)
        if (ad_matrix(sc, sc.ppowers[i]) != ad_matrix(sc, unit_vec(f, n, i)).pow(f.characteristic())) return false;
    return true;
}

std::vector<RestrictedLieAlgebra> enumerate_algebras(const Field& f, std::size_t n, std::size_t cap) {
    require_finite(f);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    const auto vecs = all_vectors(f, n);
    struct Table {
        StructureConstants sc;
        std::vector<std::vector<Vec>> choices;  // admissible e_i^[p]
        std::size_t count = 1;
    };
    std::vector<Table> tables;
    for (const auto& flat : all_vectors(f, n * pairs.size())) {
        StructureConstants sc = StructureConstants::zero(f, labels);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            Vec v(flat.begin() + static_cast<std::ptrdiff_t>(k * n), flat.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
            sc.set_bracket(pairs[k].first, pairs[k].second, v);
        }
        Table t{sc, {}, 1};
        for (std::size_t i = 0; i < n && t.count; ++i) {
            const Matrix target = ad_matrix(sc, unit_vec(f, n, i)).pow(f.characteristic());
            std::vector<Vec> ok;
            for (const auto& v : vecs)
                if (ad_matrix(sc, v) == target) ok.push_back(v);
            t.count *= ok.size();
            t.choices.push_back(std::move(ok));
        }
        if (t.count == 0) continue;
        // Jacobi, checked on the table with any admissible p-powers
        for (std::size_t i = 0; i < n; ++i) sc.ppowers[i] = t.choices[i].front();
        if (!valid_restricted(sc)) continue;
        tables.push_back(std::move(t));
    }

    std::vector<RestrictedLieAlgebra> out;
    for (std::size_t round = 0; out.size() < cap; ++round) {
        bool any = false;
        for (auto& t : tables) {
            if (round >= t.count || out.size() >= cap) continue;
            any = true;
            StructureConstants sc = t.sc;
            std::size_t x = round;
            for (std::size_t i = 0; i < n; ++i) {
                sc.ppowers[i] = t.choices[i][x % t.choices[i].size()];
                x /= t.choices[i].size();
            }
            if (!valid_restricted(sc)) throw std::logic_error("enumerated table failed the independent check");
            out.emplace_back(sc);
        }
        if (!any) break;
    }
    return out;
}

}  // namespace radu::oracle
