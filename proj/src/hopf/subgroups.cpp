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

#include "radu/hopf/subgroups.hpp"

#include "radu/errors.hpp"

namespace radu {

namespace {

// (P (x) P) t for a linear map P: n -> q.
Vec project_tensor(const Matrix& p, const Vec& t) {
    const std::size_t n = p.cols(), q = p.rows();
    Vec r = zero_vec(p.field(), q * q);
    for (std::size_t ab = 0; ab < n * n; ++ab) {
        if (t[ab].is_zero()) continue;
        for (std::size_t x = 0; x < q; ++x) {
            const Scalar& px = p.at(x, ab / n);
            if (px.is_zero()) continue;
            const Scalar c = t[ab] * px;
            for (std::size_t y = 0; y < q; ++y)
                if (!p.at(y, ab % n).is_zero()) r[x * q + y] += c * p.at(y, ab % n);
        }
    }
    return r;
}

SubgroupIdealReport fail(std::string what, Vec witness, std::string detail) {
    return {false, std::move(what), std::move(witness), std::move(detail)};
}

}  // namespace

SubgroupIdealReport is_subgroup_ideal(const HopfAlgebra& a, const Subspace& ideal) {
    const std::size_t d = a.dim();
    if (ideal.ambient() != d) throw DimensionMismatch("ideal ambient dimension differs from the Hopf algebra");
    const Field& f = a.field();
    for (const auto& b : ideal.basis())
        for (std::size_t i = 0; i < d; ++i) {
            const Vec e = unit_vec(f, d, i);
            for (const Vec& prod : {a.multiply(e, b), a.multiply(b, e)})
                if (!ideal.contains(prod))
                    return fail("ideal", b,
                                "product of " + a.format(b) + " with " + a.labels()[i] + " is " + a.format(prod) +
                                    ", outside the ideal");
        }
    for (const auto& b : ideal.basis())
        if (!a.counit(b).is_zero())
            return fail("counit", b, "counit(" + a.format(b) + ") = " + a.counit(b).to_string());
    const QuotientData q = quotient(ideal);
    std::vector<std::string> qlabels;
    for (auto c : q.complement) qlabels.push_back("[" + a.labels()[c] + "]");
    for (const auto& b : ideal.basis()) {
        const Vec img = project_tensor(q.projection, a.comultiply(b));
        if (!is_zero(img))
            return fail("comultiplication", b,
                        "D(" + a.format(b) + ") projects to " + format_tensor(img, qlabels, qlabels) +
                            " in A/I (x) A/I");
    }
    for (const auto& b : ideal.basis()) {
        const Vec s = a.antipode(b);
        if (!ideal.contains(s))
            return fail("antipode", b, "S(" + a.format(b) + ") = " + a.format(s) + ", outside the ideal");
    }
    return {};
}

Subspace tensor_ideal(const AssociativeAlgebra& a, const Subspace& j) {
    const std::size_t d = a.dim();
    std::vector<Vec> gens;
    for (const auto& b : j.basis())
        for (std::size_t i = 0; i < d; ++i) {
            const Vec e = unit_vec(a.field(), d, i);
            gens.push_back(tensor(e, b));
            gens.push_back(tensor(b, e));
        }
    return Subspace::span(a.field(), d * d, gens);
}

TensorIdentityReport tensor_intersection_identity(const AssociativeAlgebra& a, const std::vector<Subspace>& ideals) {
    const std::size_t d = a.dim();
    Subspace inter = Subspace::whole(a.field(), d);
    Subspace rhs = Subspace::whole(a.field(), d * d);
    for (const auto& i : ideals) {
        inter = inter.intersect(i);
        rhs = rhs.intersect(tensor_ideal(a, i));
    }
    Subspace lhs = tensor_ideal(a, inter);
    TensorIdentityReport r{lhs == rhs, lhs, rhs, std::nullopt};
    if (!r.equal)
        for (const auto& v : rhs.basis())
            if (!lhs.contains(v)) {
                r.witness = v;
                break;
            }
    return r;
}

UnionResult schematic_union(const HopfAlgebra& a, const std::vector<Subspace>& ideals, bool force) {
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        const auto rep = is_subgroup_ideal(a, ideals[i]);
        if (!rep.ok)
            throw NotAPIdeal("member " + std::to_string(i) + " is not a subgroup ideal (" + rep.failed + ": " +
                             rep.detail + ")");
    }
    bool directed = true;
    for (std::size_t i = 0; i < ideals.size() && directed; ++i)
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
            const Subspace both = ideals[i].intersect(ideals[j]);
            bool bounded = false;
            for (const auto& k : ideals)
                if (both.contains(k)) {
                    bounded = true;
                    break;
                }
            if (!bounded) {
                directed = false;
                if (!force)
                    throw NonDirectedFamily("family is not directed: members " + std::to_string(i) + " " +
                                                a.format(ideals[i]) + " and " + std::to_string(j) + " " +
                                                a.format(ideals[j]) + " have no common larger subgroup",
                                            i, j);
                break;
            }
        }
    Subspace inter = Subspace::whole(a.field(), d);
    for (const auto& i : ideals) inter = inter.intersect(i);
    UnionResult r{inter, is_subgroup_ideal(a, inter), directed};
    if (directed && !r.check.ok) throw std::logic_error("intersection of a directed family is not a subgroup ideal");
    return r;
}

Vec conjugation_coaction(const HopfAlgebra& a, const Vec& x) {
    const std::size_t d = a.dim();
    const Field& f = a.field();
    const Vec t = a.comultiply(x);
    Vec r = zero_vec(f, d * d);
    for (std::size_t ab = 0; ab < d * d; ++ab) {
        if (t[ab].is_zero()) continue;
        // Delta applied to the second leg: a_(1) (x) a_(2) (x) a_(3)
        const Vec& inner = a.data().comult[ab % d];
        const Vec first = unit_vec(f, d, ab / d);
        for (std::size_t k = 0; k < d * d; ++k) {
            if (inner[k].is_zero()) continue;
            const Vec left = a.multiply(first, a.antipode(unit_vec(f, d, k % d)));
            axpy(r, t[ab] * inner[k], tensor(left, unit_vec(f, d, k / d)));
        }
    }
    return r;
}

namespace {

Vec mirrored_coaction(const HopfAlgebra& a, const Vec& x) {
    const std::size_t d = a.dim();
    const Field& f = a.field();
    const Vec t = a.comultiply(x);
    Vec r = zero_vec(f, d * d);
    for (std::size_t ab = 0; ab < d * d; ++ab) {
        if (t[ab].is_zero()) continue;
        const Vec& inner = a.data().comult[ab % d];
        const Vec s1 = a.antipode(unit_vec(f, d, ab / d));
        for (std::size_t k = 0; k < d * d; ++k) {
            if (inner[k].is_zero()) continue;
            const Vec right = a.multiply(s1, unit_vec(f, d, k % d));
            axpy(r, t[ab] * inner[k], tensor(unit_vec(f, d, k / d), right));
        }
    }
    return r;
}

}  // namespace

bool is_normal(const HopfAlgebra& a, const Subspace& ideal, bool both_sides) {
    if (!a.is_commutative()) throw UnsupportedKind("normality is defined here for commutative coordinate rings only");
    const std::size_t d = a.dim();
    const Field& f = a.field();
    const Matrix p = quotient(ideal).projection;
    for (const auto& b : ideal.basis()) {
        const Vec c = conjugation_coaction(a, b);
        for (std::size_t i = 0; i < d; ++i) {
            Vec leg(c.begin() + static_cast<std::ptrdiff_t>(i * d), c.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
            if (!is_zero(p.apply(leg))) return false;
        }
        if (both_sides) {
            const Vec m = mirrored_coaction(a, b);
            for (std::size_t j = 0; j < d; ++j) {
                Vec leg = zero_vec(f, d);
                for (std::size_t i = 0; i < d; ++i) leg[i] = m[i * d + j];
                if (!is_zero(p.apply(leg))) return false;
            }
        }
    }
    return true;
}

Subspace frobenius_kernel(const HopfAlgebra& a, unsigned r) {
    if (!a.is_commutative()) throw UnsupportedKind("Frobenius kernels need a commutative coordinate ring");
    std::uint64_t e = 1;
    for (unsigned i = 0; i < r; ++i) e *= a.field().characteristic();
    std::vector<Vec> gens;
    for (const auto& b : a.augmentation_basis()) gens.push_back(a.algebra().power(b, e));
    return a.algebra().ideal_generated(gens);
}

}  // namespace radu
