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

#include "radu/hopf/enveloping.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "radu/errors.hpp"
#include "radu/hopf/subgroups.hpp"
#include "radu/lie/analysis.hpp"

namespace radu {

namespace {

using Exps = std::vector<std::uint32_t>;

class Rewriter {
   public:
    Rewriter(const RestrictedLieAlgebra& g, std::size_t size) : g_(g), n_(g.dim()), p_(g.field().characteristic()), size_(size) {}

    std::size_t index(const Exps& a) const {
        std::size_t idx = 0;
        for (auto e : a) idx = idx * p_ + e;
        return idx;
    }

    Exps exps(std::size_t idx) const {
        Exps a(n_);
        for (std::size_t i = n_; i-- > 0;) {
            a[i] = static_cast<std::uint32_t>(idx % p_);
            idx /= p_;
        }
        return a;
    }

    // e_i * e^a, memoized per (i, a).
    const Vec& left_mul(std::size_t i, std::size_t a) {
        const auto key = std::make_pair(i, a);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Vec r = compute(i, a);
        return memo_.emplace(key, std::move(r)).first->second;
    }

    Vec left_mul_vec(std::size_t i, const Vec& v) {
        Vec r = zero_vec(g_.field(), size_);
        for (std::size_t a = 0; a < size_; ++a)
            if (!v[a].is_zero()) axpy(r, v[a], left_mul(i, a));
        return r;
    }

    // sum_k c_k e_k * e^a
    Vec lie_times(const Vec& c, std::size_t a) {
        Vec r = zero_vec(g_.field(), size_);
        for (std::size_t k = 0; k < n_; ++k)
            if (!c[k].is_zero()) axpy(r, c[k], left_mul(k, a));
        return r;
    }

   private:
    Vec compute(std::size_t i, std::size_t idx) {
        Exps a = exps(idx);
        std::size_t j = 0;
        while (j < n_ && a[j] == 0) ++j;
        if (j == n_ || i < j) {
            a[i] = 1;
            return unit_vec(g_.field(), size_, index(a));
        }
        if (i == j) {
            if (a[i] + 1 < p_) {
                ++a[i];
                return unit_vec(g_.field(), size_, index(a));
            }
            a[i] = 0;
            return lie_times(g_.basis_ppower(i), index(a));
        }
        // i > j: e_i e_j m = e_j (e_i m) + [e_i, e_j] m
        --a[j];
        const std::size_t rest = index(a);
        Vec r = left_mul_vec(j, left_mul(i, rest));
        axpy(r, g_.field().one(), lie_times(g_.basis_bracket(i, j), rest));
        return r;
    }

    const RestrictedLieAlgebra& g_;
    std::size_t n_;
    std::uint32_t p_;
    std::size_t size_;
    std::map<std::pair<std::size_t, std::size_t>, Vec> memo_;
};

std::string monomial_label(const std::vector<std::string>& labels, const Exps& a) {
    bool digit_end = false;
    for (const auto& l : labels)
        if (!l.empty() && std::isdigit(static_cast<unsigned char>(l.back()))) digit_end = true;
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!s.empty() && digit_end) s += "_";
        s += labels[i];
        if (a[i] > 1) s += (digit_end ? "^" : "") + std::to_string(a[i]);
    }
    return "u_" + (s.empty() ? std::string("1") : s);
}

std::uint32_t binom_mod(std::uint32_t n, std::uint32_t k, std::uint32_t p) {
    std::uint64_t num = 1, den = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    return modp::mul(static_cast<std::uint32_t>(num), modp::inv(static_cast<std::uint32_t>(den), p), p);
}

}  // namespace

std::size_t RestrictedEnveloping::index_of(const std::vector<std::uint32_t>& exps) const {
    const std::uint32_t p = hopf.field().characteristic();
    std::size_t idx = 0;
    for (auto e : exps) idx = idx * p + e;
    return idx;
}

Vec RestrictedEnveloping::embed(const Vec& x) const {
    Vec r = zero_vec(hopf.field(), hopf.dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<std::uint32_t> a(x.size(), 0);
        a[i] = 1;
        r[index_of(a)] = x[i];
    }
    return r;
}

RestrictedEnveloping restricted_enveloping_algebra(const RestrictedLieAlgebra& g, std::size_t cap) {
    const Field& f = g.field();
    if (!f.is_field()) throw UnsupportedKind("enveloping algebras need field coefficients");
    const std::uint32_t p = f.characteristic();
    const std::size_t n = g.dim();
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
        size *= p;
        if (size > cap)
            throw CapExceeded("u(g) has dimension " + std::to_string(p) + "^" + std::to_string(n) + ", above the cap " +
                              std::to_string(cap));
    }
    Rewriter rw(g, size);
    std::vector<Exps> monos;
    std::vector<std::string> labels;
    for (std::size_t idx = 0; idx < size; ++idx) {
        monos.push_back(rw.exps(idx));
        labels.push_back(monomial_label(g.labels(), monos.back()));
    }

    HopfData h{AlgebraData{&f, labels, {}, unit_vec(f, size, 0)}, {}, zero_vec(f, size), Matrix(f, size, size)};
    h.counit[0] = f.one();
    h.algebra.mult.reserve(size * size);
    for (std::size_t a = 0; a < size; ++a) {
        // e^a e^b = e_1^{a_1} (... (e_n^{a_n} e^b))
        for (std::size_t b = 0; b < size; ++b) {
            Vec v = unit_vec(f, size, b);
            for (std::size_t i = n; i-- > 0;)
                for (std::uint32_t k = 0; k < monos[a][i]; ++k) v = rw.left_mul_vec(i, v);
            h.algebra.mult.push_back(std::move(v));
        }
    }
    for (std::size_t a = 0; a < size; ++a) {
        Vec c = zero_vec(f, size * size);
        for (std::size_t b = 0; b < size; ++b) {
            std::uint32_t coeff = 1;
            Exps rest(n);
            for (std::size_t i = 0; i < n && coeff; ++i) {
                if (monos[b][i] > monos[a][i]) coeff = 0;
                else {
                    coeff = modp::mul(coeff, binom_mod(monos[a][i], monos[b][i], p), p);
                    rest[i] = monos[a][i] - monos[b][i];
                }
            }
            if (coeff) c[b * size + rw.index(rest)] = f.from_int(coeff);
        }
        h.comult.push_back(std::move(c));

        // S(e^a) = (-1)^{|a|} e_n^{a_n} ... e_1^{a_1}
        Vec s = unit_vec(f, size, 0);
        std::uint32_t degree = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint32_t k = 0; k < monos[a][i]; ++k, ++degree) s = rw.left_mul_vec(i, s);
        if (degree % 2) s = scale(-f.one(), s);
        for (std::size_t i = 0; i < size; ++i) h.antipode.at(i, a) = s[i];
    }
    return RestrictedEnveloping{HopfAlgebra::trusted(std::move(h)), std::move(monos)};
}

Subspace enveloping_of(const RestrictedEnveloping& u, const RestrictedLieAlgebra& g, const Subspace& s) {
    if (!is_restricted_subalgebra(g, s)) throw NotAPIdeal(g.format(s) + " is not a restricted subalgebra");
    std::vector<Vec> gens;
    for (const auto& b : s.basis()) gens.push_back(u.embed(b));
    Subspace cur = Subspace::span(u.hopf.field(), u.hopf.dim(), {u.hopf.algebra().unit()});
    for (;;) {
        std::vector<Vec> all = cur.basis();
        for (const auto& x : gens)
            for (const auto& b : cur.basis()) all.push_back(u.hopf.multiply(x, b));
        Subspace next = Subspace::span(u.hopf.field(), u.hopf.dim(), all);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

Subspace subgroup_ideal_from_p_subalgebra(const RestrictedEnveloping& u, const HopfAlgebra& coordinate_ring,
                                          const RestrictedLieAlgebra& g, const Subspace& s, bool verify) {
    if (coordinate_ring.dim() != u.hopf.dim()) throw DimensionMismatch("coordinate ring is not dual to u(g)");
    Subspace ideal = enveloping_of(u, g, s).annihilator();
    if (verify) {
        const auto rep = is_subgroup_ideal(coordinate_ring, ideal);
        if (!rep.ok) throw std::logic_error("annihilator of u(S) failed the subgroup-ideal test: " + rep.detail);
    }
    return ideal;
}

}  // namespace radu
