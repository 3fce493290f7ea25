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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Derived expectations are recomputed here from the brute-force oracle or from
// closed forms, never from the code under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "radu/embedding.hpp"
#include "radu/errors.hpp"
#include "radu/gallery/hopf.hpp"
#include "radu/gallery/lie.hpp"
#include "radu/hopf/enveloping.hpp"
#include "radu/hopf/subgroups.hpp"
#include "radu/lie/analysis.hpp"
#include "radu/lie/radical.hpp"
#include "radu/oracle/oracle.hpp"

using namespace radu;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects failed expectations for one criterion.
struct Check {
    std::vector<std::string> failures;
    std::size_t count = 0;
    void expect(bool ok, const std::string& what) {
        ++count;
        if (!ok && failures.size() < 5) failures.push_back(what);
        else if (!ok) failures.push_back("");
    }
};

int failed_criteria = 0;

void criterion(int n, const std::string& title, const std::function<std::string(Check&)>& body) {
    Check c;
    std::string summary;
    const auto t0 = Clock::now();
    try {
        summary = body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    const bool ok = c.failures.empty();
    if (!ok) ++failed_criteria;
    std::ostringstream line;
    line << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << title << " [" << c.count << " checks, "
         << std::fixed;
    line.precision(2);
    line << s << " s]";
    if (!summary.empty()) line << " " << summary;
    std::cout << line.str() << "\n";
    for (const auto& f : c.failures)
        if (!f.empty()) std::cout << "    failed: " << f << "\n";
    if (c.failures.size() > 5) std::cout << "    ... " << c.failures.size() - 5 << " more\n";
    std::cout.flush();
}

Subspace span_of(const RestrictedLieAlgebra& g, std::initializer_list<std::size_t> idx) {
    std::vector<Vec> b;
    for (auto i : idx) b.push_back(g.basis(i));
    return g.span(b);
}

Scalar random_rational(std::mt19937_64& rng, const Field& f) {
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
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng, f));
    return v;
}

// p-ideal test on bases only; valid for subalgebras since cross terms of the
// p-map are iterated brackets.
bool p_ideal_on_basis(const RestrictedLieAlgebra& g, const Subspace& s) {
    for (const auto& b : s.basis()) {
        for (std::size_t i = 0; i < g.dim(); ++i)
            if (!s.contains(oracle::bracket(g.constants(), g.basis(i), b))) return false;
        if (!s.contains(oracle::p_power(g, b))) return false;
    }
    return true;
}

bool restricted_on_basis(const RestrictedLieAlgebra& g, const Subspace& s) {
    for (const auto& a : s.basis()) {
        for (const auto& b : s.basis())
            if (!s.contains(oracle::bracket(g.constants(), a, b))) return false;
        if (!s.contains(oracle::p_power(g, a))) return false;
    }
    return true;
}

// Spans of vectors whose coordinates lie in `coeffs`.
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
                for (const auto& t : next) seen = seen || t == w;
                if (!seen) next.push_back(w);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<RestrictedLieAlgebra> grid_over_f2() {
    auto all = oracle::enumerate_algebras(Field::prime(2), 2, 10000);
    const auto three = oracle::enumerate_algebras(Field::prime(2), 3, 10000 - all.size());
    all.insert(all.end(), three.begin(), three.end());
    return all;
}

const std::vector<RestrictedLieAlgebra>& grid() {
    static const auto g = grid_over_f2();
    return g;
}

}  // namespace

int main() {
    const Field& F2 = Field::prime(2);

    criterion(1, "imperfect G over F_2(t) end to end", [&](Check& c) {
        const auto t0 = Clock::now();
        const auto G = gallery::imperfect_G(2);
        const auto& g = G.algebra;
        c.expect(validate(g.constants()).ok, "validate");
        const auto cs = characteristic_series(g);
        c.expect(cs.center == span_of(g, {0}), "center is <X>");
        c.expect(cs.solvable, "solvable");
        c.expect(!cs.nilpotent, "not nilpotent");
        const auto steps =
            verify_subnormal_series(g, {g.zero_subspace(), span_of(g, {0}), span_of(g, {0, 1}), g.whole()});
        c.expect(steps.size() == 3 && steps[0].kind == SeriesStep::Kind::mu && steps[1].kind == SeriesStep::Kind::alpha &&
                     steps[2].kind == SeriesStep::Kind::mu,
                 "series quotients mu, alpha, mu");
        const auto r = rad_p(g);
        c.expect(r.radical.is_zero() && r.verdict == Verdict::exact, "rad_p(g) = 0 exact");
        c.expect(is_p_reductive(g).verdict == Tristate::yes, "g p-reductive");
        const auto n = subalgebra(g, span_of(g, {0, 1})).algebra;
        const auto rn = rad_p(n);
        c.expect(rn.radical.is_zero() && rn.verdict == Verdict::exact, "rad_p(N) = 0");
        c.expect(is_p_reductive(n).verdict == Tristate::no, "N not p-reductive");
        const auto q = quotient(g, span_of(g, {0})).algebra;
        const auto rq = rad_p(q);
        c.expect(rq.radical == q.span({q.basis(0)}) && rq.verdict == Verdict::exact, "rad_p(g/<X>) = <Y>");
        c.expect(q.labels()[0] == "Y", "quotient basis starts with the image of Y");
        const double s = seconds_since(t0);
        c.expect(s < 5.0, "runtime under 5 s");
        return std::string();
    });

    criterion(2, "faithful restricted representation at p = 2 and p = 3", [&](Check& c) {
        std::mt19937_64 rng(20261016);
        for (std::uint32_t p : {2u, 3u}) {
            const auto G = gallery::imperfect_G(p);
            const auto& g = G.algebra;
            c.expect(gallery::verify_restricted_rep(g, G.representation).ok, "representation verifies at p=" + std::to_string(p));
            for (int k = 0; k < 200; ++k) {
                const Vec x = random_vec(rng, g.field(), 3);
                const Matrix rx = gallery::represent(G.representation, x);
                c.expect(gallery::represent(G.representation, oracle::p_power(g, x)) == rx.pow(p),
                         "rho(x^[p]) = rho(x)^p for x = " + g.format(x));
                c.expect(oracle::p_power(g, x) == g.p_power(x), "oracle p-power agrees for x = " + g.format(x));
            }
        }
        return std::string();
    });

    criterion(3, "sl2 Frobenius kernel in characteristic 2", [&](Check& c) {
        const auto t0 = Clock::now();
        const auto g = gallery::sl2_kernel_char2();  // e, h, f
        const auto cs = characteristic_series(g);
        c.expect(cs.nilpotent && cs.nilpotency_class == 2, "nilpotent of class 2");
        c.expect(!is_unipotent(g, g.whole()), "whole algebra not unipotent");
        c.expect(!oracle::is_unipotent(g, g.whole()), "oracle: whole algebra not unipotent");
        c.expect(cs.center == span_of(g, {1}), "center is <h>");
        for (std::size_t i : {0u, 2u}) {
            const auto s = span_of(g, {i});
            c.expect(is_unipotent(g, s) && oracle::is_unipotent(g, s), "<" + g.labels()[i] + "> unipotent");
        }
        c.expect(spin_subalgebra(g, span_of(g, {0, 2})).is_whole(), "spin <e,f> is whole");
        const auto r = rad_p(g);
        c.expect(r.radical.is_zero() && r.verdict == Verdict::exact, "rad_p = 0");
        c.expect(oracle::radical(g).is_zero(), "oracle radical = 0");
        c.expect(seconds_since(t0) < 1.0, "runtime under 1 s");
        return std::string();
    });

    criterion(4, "finite scan agrees with the all-subspaces oracle over F_2", [&](Check& c) {
        const auto t0 = Clock::now();
        RadicalOptions opts;
        opts.force = Strategy::finite_scan;
        std::size_t agree = 0;
        for (const auto& g : grid()) {
            const auto cert = rad_p(g, opts);
            const bool ok = cert.verdict == Verdict::exact && cert.radical == oracle::radical(g);
            agree += ok;
            c.expect(ok, "disagreement on dimension " + std::to_string(g.dim()));
        }
        c.expect(!grid().empty(), "enumeration is nonempty");
        c.expect(seconds_since(t0) < 600.0, "runtime under 10 min");
        return std::to_string(agree) + "/" + std::to_string(grid().size()) + " agree";
    });

    criterion(5, "radical commutes with base change to F_4 and F_8", [&](Check& c) {
        const std::size_t n = std::min<std::size_t>(500, grid().size());
        c.expect(n == 500, "at least 500 instances available");
        std::size_t oracle_checked = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& g = grid()[i];
            const auto base = rad_p(g);
            c.expect(base.verdict == Verdict::exact, "exact over F_2");
            for (std::uint32_t m : {2u, 3u}) {
                const auto e = FieldEmbedding::inclusion(F2, Field::galois(2, m));
                const auto h = base_change(g, e);
                const auto ext = rad_p(h);
                c.expect(ext.verdict == Verdict::exact && ext.radical == base_change(base.radical, e),
                         "instance " + std::to_string(i) + " over F_" + std::to_string(1u << m));
                if (i % 25 == 0) {
                    c.expect(oracle::radical(h) == ext.radical, "oracle over the extension, instance " + std::to_string(i));
                    ++oracle_checked;
                }
            }
        }
        return std::to_string(n) + " instances, " + std::to_string(oracle_checked) + " extension radicals re-derived by oracle";
    });

    criterion(6, "unipotent subalgebras lie in rad_p when the derived p-closure is unipotent", [&](Check& c) {
        std::size_t applicable = 0, subalgebras = 0;
        for (const auto& g : grid()) {
            const Subspace derived = commutator(g, g.whole(), g.whole());
            const Subspace closure = oracle::p_ideal_closure(g, derived);
            if (!oracle::is_unipotent(g, closure)) continue;
            ++applicable;
            const auto r = rad_p(g);
            c.expect(r.verdict == Verdict::exact, "exact verdict");
            for (const auto& s : oracle::unipotent_subalgebras(g)) {
                ++subalgebras;
                c.expect(r.radical.contains(s), "unipotent subalgebra outside rad_p");
            }
        }
        c.expect(applicable > 0, "hypothesis met by some instance");
        return std::to_string(applicable) + " instances, " + std::to_string(subalgebras) + " unipotent subalgebras";
    });

    criterion(7, "no nonzero p-nilpotent element implies abelian (F_2 and F_4)", [&](Check& c) {
        std::size_t applicable = 0, instances = 0;
        const auto into_f4 = FieldEmbedding::inclusion(F2, Field::galois(2, 2));
        for (const auto& g0 : grid())
            for (int pass = 0; pass < 2; ++pass) {
                const RestrictedLieAlgebra g = pass == 0 ? g0 : base_change(g0, into_f4);
                ++instances;
                bool any = false;
                for (const auto& v : oracle::all_vectors(g.field(), g.dim())) {
                    if (is_zero(v)) continue;
                    const bool nil = oracle::is_p_nilpotent(g, v);
                    c.expect(nil == is_p_nilpotent(g, v), "p-nilpotency test agrees with the oracle");
                    if (nil) {
                        any = true;
                        break;
                    }
                }
                if (any) continue;
                ++applicable;
                c.expect(g.is_abelian(), "instance without p-nilpotents is not abelian");
            }
        c.expect(applicable > 0, "hypothesis met by some instance");
        return std::to_string(applicable) + " of " + std::to_string(instances) + " instances have no p-nilpotents";
    });

    criterion(8, "Hopf layer", [&](Check& c) {
        const auto t0 = Clock::now();
        const auto a2 = gallery::alpha_hopf(F2), m2 = gallery::mu_hopf(F2), a4 = gallery::alpha_hopf(F2, 2);
        const auto prod = tensor_product(a2, m2);
        for (const auto* h : {&a2, &m2, &a4, &prod}) c.expect(validate_hopf(h->data()).ok, "validate_hopf");
        c.expect(validate_hopf(tensor_product(a4, m2).data()).ok, "alpha_4 x mu_2 validates");

        const auto G = gallery::imperfect_G(2);
        const auto sl = gallery::sl2_kernel_char2();
        for (const auto* g : {&G.algebra, &sl}) {
            const auto u = restricted_enveloping_algebra(*g);
            const auto d = dual(u.hopf);
            c.expect(validate_hopf(u.hopf.data()).ok, "u(g) validates");
            c.expect(validate_hopf(d.data()).ok && d.dim() == 8, "dual u(g) validates");
            // First Frobenius kernel is the whole group: its ideal is 0.
            c.expect(frobenius_kernel(d, 1).is_zero(), "Frobenius kernel of dual u(g) at r=1 is the whole group");
        }

        // alpha_4 = k[x]/(x^4): kernel ideals (x^2) then (x^4) = 0, computed by hand.
        std::size_t ix = 0, ix2 = 0;
        for (std::size_t i = 0; i < a4.dim(); ++i) {
            if (a4.labels()[i] == "x") ix = i;
            if (a4.labels()[i] == "x2") ix2 = i;
        }
        const Vec x = unit_vec(F2, 4, ix);
        const Vec x2 = a4.multiply(x, x);
        c.expect(x2 == unit_vec(F2, 4, ix2), "x*x = x2");
        c.expect(frobenius_kernel(a4, 1) == a4.algebra().ideal_generated({x2}), "first kernel ideal (x^2)");
        c.expect(frobenius_kernel(a4, 2).is_zero(), "second kernel ideal 0");

        std::size_t px = 0, pg = 0, pone = 0;
        for (std::size_t i = 0; i < prod.dim(); ++i) {
            if (prod.labels()[i] == "x") px = i;
            if (prod.labels()[i] == "g") pg = i;
            if (prod.labels()[i] == "one") pone = i;
        }
        const Vec vx = unit_vec(F2, 4, px), vg1 = add(unit_vec(F2, 4, pg), unit_vec(F2, 4, pone));
        const Subspace ia = prod.algebra().ideal_generated({vg1}), im = prod.algebra().ideal_generated({vx});
        bool refused = false;
        try {
            schematic_union(prod, {ia, im});
        } catch (const NonDirectedFamily&) {
            refused = true;
        }
        c.expect(refused, "non-directed family refused without the testing hook");
        const auto forced = schematic_union(prod, {ia, im}, true);
        c.expect(!forced.check.ok && forced.check.witness.has_value(), "forced union fails with a witness");
        c.expect(forced.ideal == ia.intersect(im), "union ideal is the intersection");

        std::mt19937_64 rng(20261016);
        const std::vector<AssociativeAlgebra> algebras{gallery::truncated_polynomial(F2, 6),
                                                       gallery::truncated_polynomial(Field::prime(3), 5),
                                                       gallery::square_zero(F2, {"x", "y", "z"}), prod.algebra()};
        for (int trial = 0; trial < 100; ++trial) {
            const auto& a = algebras[rng() % algebras.size()];
            std::vector<Subspace> chain{Subspace::whole(a.field(), a.dim())};
            const std::size_t len = rng() % 5 + 1;
            while (chain.size() < len) {
                std::vector<Vec> gens;
                for (const auto& b : chain.back().basis())
                    if (rng() % 2) gens.push_back(scale(a.field().element(rng() % a.field().order()), b));
                chain.push_back(a.ideal_generated(gens));
            }
            c.expect(tensor_intersection_identity(a, chain).equal, "identity on a nested chain");
        }
        const auto sq = gallery::square_zero(F2, {"x", "y"});
        const auto bad = tensor_intersection_identity(
            sq, {sq.ideal_generated({unit_vec(F2, 3, 1)}), sq.ideal_generated({unit_vec(F2, 3, 2)})});
        c.expect(!bad.equal && bad.witness.has_value(), "identity fails on (x), (y)");
        c.expect(seconds_since(t0) < 30.0, "runtime under 30 s");
        return std::string();
    });

    criterion(9, "p-ideals correspond to normal subgroup ideals", [&](Check& c) {
        std::size_t checked = 0, normal = 0;
        const auto G = gallery::imperfect_G(2);
        const Field& k = G.algebra.field();
        struct Case {
            const RestrictedLieAlgebra* g;
            std::vector<Scalar> coeffs;
        };
        const auto sl = gallery::sl2_kernel_char2();
        const std::vector<Case> cases{{&G.algebra, {k.zero(), k.one(), k.variable(), k.variable() + k.one()}},
                                      {&sl, {F2.zero(), F2.one()}}};
        for (const auto& cs : cases) {
            const auto& g = *cs.g;
            const auto u = restricted_enveloping_algebra(g);
            const auto d = dual(u.hopf);
            c.expect(d.dim() == 8, "coordinate ring of dimension 8");
            for (const auto& s : spans_over(g.field(), g.dim(), cs.coeffs)) {
                if (!restricted_on_basis(g, s)) continue;
                const Subspace ideal = subgroup_ideal_from_p_subalgebra(u, d, g, s);
                const bool expected = p_ideal_on_basis(g, s);
                const bool got = is_normal(d, ideal);
                c.expect(got == expected, "normality mismatch for " + g.format(s));
                c.expect(is_normal(d, ideal, true) == expected, "two-sided normality mismatch for " + g.format(s));
                ++checked;
                normal += got;
            }
        }
        return std::to_string(checked) + " restricted subalgebras, " + std::to_string(normal) + " normal";
    });

    criterion(10, "imperfect G has no p-nilpotents over F_2(t) but gains one after t -> s^2", [&](Check& c) {
        const auto G = gallery::imperfect_G(2);
        const auto& g = G.algebra;
        std::mt19937_64 rng(20261016);
        std::size_t n = 0;
        while (n < 1000) {
            const Vec x = random_vec(rng, g.field(), 3);
            if (is_zero(x)) continue;
            ++n;
            // Oracle: iterate the p-map dim(g) times; p-nilpotent iff that reaches 0.
            Vec y = x;
            for (std::size_t i = 0; i < g.dim(); ++i) y = oracle::p_power(g, y);
            c.expect(!is_zero(y), "oracle finds a p-nilpotent " + g.format(x));
            c.expect(!is_p_nilpotent(g, x), "p-nilpotent " + g.format(x));
        }
        const Field& ks = Field::rational_functions(2, "s");
        const auto h = base_change(g, FieldEmbedding::inseparable(g.field(), ks, 1));
        const Vec w = add(scale(ks.variable(), h.basis(0)), h.basis(1));
        c.expect(is_zero(oracle::p_power(h, oracle::p_power(h, w))), "oracle: (sX+Y)^[2][2] = 0");
        c.expect(is_p_nilpotent(h, w), "sX+Y is p-nilpotent after base change");
        return std::to_string(n) + " random elements";
    });

    std::cout << (failed_criteria == 0 ? "all criteria pass" : std::to_string(failed_criteria) + " criteria fail")
              << "\n";
    return failed_criteria == 0 ? 0 : 1;
}
