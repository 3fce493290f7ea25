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

#include "radu/hopf/algebra.hpp"

#include <set>

#include "radu/errors.hpp"

namespace radu {

Vec tensor(const Vec& v, const Vec& w) {
    const Field& f = v.empty() ? (w.empty() ? Field::prime(2) : w[0].field()) : v[0].field();
    Vec r = zero_vec(f, v.size() * w.size());
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a].is_zero()) continue;
        for (std::size_t b = 0; b < w.size(); ++b)
            if (!w[b].is_zero()) r[a * w.size() + b] = v[a] * w[b];
    }
    return r;
}

std::string format_tensor(const Vec& t, const std::vector<std::string>& left, const std::vector<std::string>& right) {
    const std::size_t n = right.size();
    std::string s;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k].is_zero()) continue;
        if (!s.empty()) s += "+";
        if (!t[k].is_one()) s += t[k].to_factor_string() + "*";
        s += left[k / n] + "@" + right[k % n];
    }
    return s.empty() ? "0" : s;
}

namespace {

ValidationReport failure(std::string check, std::vector<std::size_t> idx, std::string detail) {
    return {false, std::move(check), std::move(idx), std::move(detail)};
}

Vec mul_raw(const AlgebraData& a, const Vec& x, const Vec& y) {
    const std::size_t d = a.dim();
    const Field& f = x.empty() ? *a.field : x[0].field();
    Vec r = zero_vec(f, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (!y[j].is_zero()) axpy(r, x[i] * y[j], a.mult[i * d + j]);
    }
    return r;
}

Vec tensor_mul_raw(const AlgebraData& a, const Vec& x, const Vec& y) {
    const std::size_t d = a.dim();
    Vec r = zero_vec(*a.field, d * d);
    for (std::size_t ab = 0; ab < d * d; ++ab) {
        if (x[ab].is_zero()) continue;
        for (std::size_t cd = 0; cd < d * d; ++cd) {
            if (y[cd].is_zero()) continue;
            const Scalar c = x[ab] * y[cd];
            const Vec& u = a.mult[(ab / d) * d + cd / d];
            const Vec& w = a.mult[(ab % d) * d + cd % d];
            for (std::size_t i = 0; i < d; ++i) {
                if (u[i].is_zero()) continue;
                const Scalar cu = c * u[i];
                for (std::size_t j = 0; j < d; ++j)
                    if (!w[j].is_zero()) r[i * d + j] += cu * w[j];
            }
        }
    }
    return r;
}

bool shaped(const Vec& v, std::size_t n, const Field& f) {
    if (v.size() != n) return false;
    for (const auto& x : v)
        if (&x.field() != &f) return false;
    return true;
}

}  // namespace

ValidationReport validate_algebra(const AlgebraData& a) {
    if (!a.field || !a.field->is_field()) return failure("shape", {}, "structure constants need a field");
    const Field& f = *a.field;
    const std::size_t d = a.dim();
    if (a.mult.size() != d * d) return failure("shape", {}, "expected " + std::to_string(d * d) + " products");
    for (const auto& v : a.mult)
        if (!shaped(v, d, f)) return failure("shape", {}, "product vector of wrong length or field");
    if (!shaped(a.unit, d, f)) return failure("shape", {}, "unit vector of wrong length or field");
    auto fmt = [&](const Vec& v) { return format_combination(v, a.labels); };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec& ij = a.mult[i * d + j];
            for (std::size_t k = 0; k < d; ++k) {
                const Vec lhs = mul_raw(a, ij, unit_vec(f, d, k));
                const Vec rhs = mul_raw(a, unit_vec(f, d, i), a.mult[j * d + k]);
                if (lhs != rhs)
                    return failure("associativity", {i, j, k},
                                   "(" + a.labels[i] + "*" + a.labels[j] + ")*" + a.labels[k] + " = " + fmt(lhs) +
                                       " but " + a.labels[i] + "*(" + a.labels[j] + "*" + a.labels[k] + ") = " +
                                       fmt(rhs));
            }
        }
    for (std::size_t i = 0; i < d; ++i) {
        const Vec e = unit_vec(f, d, i);
        if (mul_raw(a, a.unit, e) != e || mul_raw(a, e, a.unit) != e)
            return failure("unit", {i}, "unit " + fmt(a.unit) + " does not act trivially on " + a.labels[i]);
    }
    return {};
}

AssociativeAlgebra::AssociativeAlgebra(AlgebraData a) : a_(std::move(a)) {
    const auto r = validate_algebra(a_);
    if (!r.ok) throw InvalidAlgebra(r.failed_check + ": " + r.detail);
}

AssociativeAlgebra AssociativeAlgebra::trusted(AlgebraData a) { return AssociativeAlgebra(std::move(a), Trusted{}); }

Vec AssociativeAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("element length differs from algebra dimension");
    return mul_raw(a_, x, y);
}

Vec AssociativeAlgebra::power(const Vec& x, std::uint64_t e) const {
    Vec result = a_.unit, base = x;
    while (e) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

bool AssociativeAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (basis_product(i, j) != basis_product(j, i)) return false;
    return true;
}

Subspace AssociativeAlgebra::ideal_generated(const std::vector<Vec>& gens) const {
    Subspace cur = Subspace::span(field(), dim(), gens);
    for (std::size_t round = 0; round <= dim(); ++round) {
        std::vector<Vec> all = cur.basis();
        for (const auto& b : cur.basis())
            for (std::size_t i = 0; i < dim(); ++i) {
                const Vec e = unit_vec(field(), dim(), i);
                all.push_back(multiply(e, b));
                all.push_back(multiply(b, e));
            }
        Subspace next = Subspace::span(field(), dim(), all);
        if (next == cur) break;
        cur = std::move(next);
    }
    return cur;
}

bool AssociativeAlgebra::is_ideal(const Subspace& s) const {
    for (const auto& b : s.basis())
        for (std::size_t i = 0; i < dim(); ++i) {
            const Vec e = unit_vec(field(), dim(), i);
            if (!s.contains(multiply(e, b)) || !s.contains(multiply(b, e))) return false;
        }
    return true;
}

Vec AssociativeAlgebra::tensor_multiply(const Vec& x, const Vec& y) const { return tensor_mul_raw(a_, x, y); }

// ---------------------------------------------------------------------------

namespace {

Vec delta_left(const HopfData& h, const Vec& t) {
    const std::size_t d = h.algebra.dim();
    Vec r = zero_vec(*h.algebra.field, d * d * d);
    for (std::size_t ab = 0; ab < d * d; ++ab) {
        if (t[ab].is_zero()) continue;
        const Vec& da = h.comult[ab / d];
        for (std::size_t k = 0; k < d * d; ++k)
            if (!da[k].is_zero()) r[k * d + ab % d] += t[ab] * da[k];
    }
    return r;
}

Vec delta_right(const HopfData& h, const Vec& t) {
    const std::size_t d = h.algebra.dim();
    Vec r = zero_vec(*h.algebra.field, d * d * d);
    for (std::size_t ab = 0; ab < d * d; ++ab) {
        if (t[ab].is_zero()) continue;
        const Vec& db = h.comult[ab % d];
        for (std::size_t k = 0; k < d * d; ++k)
            if (!db[k].is_zero()) r[(ab / d) * d * d + k] += t[ab] * db[k];
    }
    return r;
}

}  // namespace

ValidationReport validate_hopf(const HopfData& h) {
    ValidationReport r = validate_algebra(h.algebra);
    if (!r.ok) return r;
    const Field& f = *h.algebra.field;
    const std::size_t d = h.algebra.dim();
    const auto& lab = h.algebra.labels;
    if (h.comult.size() != d) return failure("shape", {}, "expected " + std::to_string(d) + " coproducts");
    for (const auto& v : h.comult)
        if (!shaped(v, d * d, f)) return failure("shape", {}, "coproduct vector of wrong length or field");
    if (!shaped(h.counit, d, f)) return failure("shape", {}, "counit of wrong length or field");
    if (h.antipode.rows() != d || h.antipode.cols() != d || &h.antipode.field() != &f)
        return failure("shape", {}, "antipode must be a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");

    auto fmt = [&](const Vec& v) { return format_combination(v, lab); };
    auto fmt2 = [&](const Vec& v) { return format_tensor(v, lab, lab); };
    auto eps = [&](const Vec& v) {
        Scalar s = f.zero();
        for (std::size_t i = 0; i < d; ++i)
            if (!v[i].is_zero()) s += v[i] * h.counit[i];
        return s;
    };

    for (std::size_t i = 0; i < d; ++i)
        if (delta_left(h, h.comult[i]) != delta_right(h, h.comult[i]))
            return failure("coassociativity", {i}, "(D(x)id)D(" + lab[i] + ") differs from (id(x)D)D(" + lab[i] + ")");
    for (std::size_t i = 0; i < d; ++i) {
        Vec left = zero_vec(f, d), right = zero_vec(f, d);
        const Vec& t = h.comult[i];
        for (std::size_t ab = 0; ab < d * d; ++ab) {
            if (t[ab].is_zero()) continue;
            left[ab % d] += h.counit[ab / d] * t[ab];
            right[ab / d] += h.counit[ab % d] * t[ab];
        }
        const Vec e = unit_vec(f, d, i);
        if (left != e || right != e)
            return failure("counit", {i}, "counit laws fail on " + lab[i] + ": D(" + lab[i] + ") = " + fmt2(t));
    }
    if (h.comult.empty() ? false : [&] {
            Vec du = zero_vec(f, d * d);
            for (std::size_t i = 0; i < d; ++i)
                if (!h.algebra.unit[i].is_zero()) axpy(du, h.algebra.unit[i], h.comult[i]);
            return du != tensor(h.algebra.unit, h.algebra.unit);
        }())
        return failure("comultiplication-multiplicative", {}, "D(1) is not 1@1");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec lhs = zero_vec(f, d * d);
            const Vec& ij = h.algebra.mult[i * d + j];
            for (std::size_t k = 0; k < d; ++k)
                if (!ij[k].is_zero()) axpy(lhs, ij[k], h.comult[k]);
            const Vec rhs = tensor_mul_raw(h.algebra, h.comult[i], h.comult[j]);
            if (lhs != rhs)
                return failure("comultiplication-multiplicative", {i, j},
                               "D(" + lab[i] + "*" + lab[j] + ") = " + fmt2(lhs) + " but D(" + lab[i] + ")D(" + lab[j] +
                                   ") = " + fmt2(rhs));
        }
    if (d && !eps(h.algebra.unit).is_one()) return failure("counit-multiplicative", {}, "counit(1) is not 1");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (eps(h.algebra.mult[i * d + j]) != h.counit[i] * h.counit[j])
                return failure("counit-multiplicative", {i, j},
                               "counit(" + lab[i] + "*" + lab[j] + ") differs from counit(" + lab[i] + ")counit(" +
                                   lab[j] + ")");
    for (std::size_t i = 0; i < d; ++i) {
        Vec left = zero_vec(f, d), right = zero_vec(f, d);
        const Vec& t = h.comult[i];
        for (std::size_t ab = 0; ab < d * d; ++ab) {
            if (t[ab].is_zero()) continue;
            const Vec ea = unit_vec(f, d, ab / d), eb = unit_vec(f, d, ab % d);
            axpy(left, t[ab], mul_raw(h.algebra, h.antipode.apply(ea), eb));
            axpy(right, t[ab], mul_raw(h.algebra, ea, h.antipode.apply(eb)));
        }
        const Vec expect = scale(h.counit[i], h.algebra.unit);
        if (left != expect)
            return failure("antipode", {i}, "m(S(x)id)D(" + lab[i] + ") = " + fmt(left) + " but counit(" + lab[i] +
                                                 ")1 = " + fmt(expect));
        if (right != expect)
            return failure("antipode", {i}, "m(id(x)S)D(" + lab[i] + ") = " + fmt(right) + " but counit(" + lab[i] +
                                                 ")1 = " + fmt(expect));
    }
    return {};
}

HopfAlgebra::HopfAlgebra(HopfData h) : h_(std::move(h)), alg_(AssociativeAlgebra::trusted(h_.algebra)) {
    const auto r = validate_hopf(h_);
    if (!r.ok) throw InvalidAlgebra(r.failed_check + ": " + r.detail);
}

HopfAlgebra::HopfAlgebra(HopfData h, Trusted) : h_(std::move(h)), alg_(AssociativeAlgebra::trusted(h_.algebra)) {}

HopfAlgebra HopfAlgebra::trusted(HopfData h) { return HopfAlgebra(std::move(h), Trusted{}); }

Vec HopfAlgebra::comultiply(const Vec& x) const {
    if (x.size() != dim()) throw DimensionMismatch("element length differs from algebra dimension");
    Vec r = zero_vec(field(), dim() * dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!x[i].is_zero()) axpy(r, x[i], h_.comult[i]);
    return r;
}

Scalar HopfAlgebra::counit(const Vec& x) const {
    Scalar s = field().zero();
    for (std::size_t i = 0; i < dim(); ++i)
        if (!x[i].is_zero()) s += x[i] * h_.counit[i];
    return s;
}

bool HopfAlgebra::is_cocommutative() const {
    const std::size_t d = dim();
    for (const auto& t : h_.comult)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a + 1; b < d; ++b)
                if (t[a * d + b] != t[b * d + a]) return false;
    return true;
}

std::vector<Vec> HopfAlgebra::augmentation_basis() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < dim(); ++i) {
        Vec v = unit_vec(field(), dim(), i);
        axpy(v, -h_.counit[i], alg_.unit());
        if (!is_zero(v)) out.push_back(std::move(v));
    }
    return out;
}

Subspace HopfAlgebra::augmentation_ideal() const { return Subspace::span(field(), dim(), augmentation_basis()); }

std::string HopfAlgebra::format_tensor(const Vec& t) const { return radu::format_tensor(t, labels(), labels()); }

HopfAlgebra dual(const HopfAlgebra& h, const std::string& prefix) {
    const Field& f = h.field();
    const std::size_t d = h.dim();
    const HopfData& src = h.data();
    HopfData out{AlgebraData{&f, {}, {}, src.counit}, {}, {}, src.antipode.transpose()};
    for (const auto& l : h.labels()) out.algebra.labels.push_back(l.rfind("u_", 0) == 0 ? prefix + l.substr(2) : prefix + l);
    out.algebra.mult.assign(d * d, zero_vec(f, d));
    for (std::size_t ij = 0; ij < d * d; ++ij)
        for (std::size_t k = 0; k < d; ++k) out.algebra.mult[ij][k] = src.comult[k][ij];
    out.comult.assign(d, zero_vec(f, d * d));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t ij = 0; ij < d * d; ++ij) out.comult[k][ij] = src.algebra.mult[ij][k];
    out.counit = src.algebra.unit;
    return HopfAlgebra::trusted(std::move(out));
}

HopfAlgebra tensor_product(const HopfAlgebra& a, const HopfAlgebra& b) {
    if (&a.field() != &b.field()) throw FieldMismatch("tensor product of Hopf algebras over different fields");
    const Field& f = a.field();
    const std::size_t m = a.dim(), n = b.dim(), d = m * n;
    std::vector<std::string> labels;
    for (const auto& la : a.labels())
        for (const auto& lb : b.labels()) {
            if (la == "one") labels.push_back(lb);
            else if (lb == "one") labels.push_back(la);
            else labels.push_back(la + "_" + lb);
        }
    if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
        labels.clear();
        for (const auto& la : a.labels())
            for (const auto& lb : b.labels()) labels.push_back(la + "__" + lb);
    }
    HopfData out{AlgebraData{&f, labels, {}, tensor(a.data().algebra.unit, b.data().algebra.unit)},
                 {},
                 tensor(a.data().counit, b.data().counit),
                 Matrix(f, d, d)};
    out.algebra.mult.reserve(d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            out.algebra.mult.push_back(tensor(a.algebra().basis_product(x / n, y / n), b.algebra().basis_product(x % n, y % n)));
    for (std::size_t x = 0; x < d; ++x) {
        const Vec& da = a.data().comult[x / n];
        const Vec& db = b.data().comult[x % n];
        Vec c = zero_vec(f, d * d);
        for (std::size_t a12 = 0; a12 < m * m; ++a12) {
            if (da[a12].is_zero()) continue;
            for (std::size_t b12 = 0; b12 < n * n; ++b12) {
                if (db[b12].is_zero()) continue;
                const std::size_t left = (a12 / m) * n + b12 / n, right = (a12 % m) * n + b12 % n;
                c[left * d + right] += da[a12] * db[b12];
            }
        }
        out.comult.push_back(std::move(c));
        const Vec s = tensor(a.data().antipode.column(x / n), b.data().antipode.column(x % n));
        for (std::size_t i = 0; i < d; ++i) out.antipode.at(i, x) = s[i];
    }
    return HopfAlgebra(std::move(out));
}

}  // namespace radu
