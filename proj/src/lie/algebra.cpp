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

#include "radu/lie/algebra.hpp"

#include "radu/errors.hpp"

namespace radu {

StructureConstants StructureConstants::zero(const Field& f, std::vector<std::string> labels) {
    StructureConstants sc;
    sc.field = &f;
    const std::size_t n = labels.size();
    sc.labels = std::move(labels);
    sc.brackets.assign(n * n, zero_vec(f, n));
    sc.ppowers.assign(n, zero_vec(f, n));
    return sc;
}

void StructureConstants::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
    const std::size_t n = dim();
    brackets.at(i * n + j) = v;
    Vec neg;
    for (const auto& x : v) neg.push_back(-x);
    brackets.at(j * n + i) = std::move(neg);
}

namespace {

Vec combine(const StructureConstants& sc, const Vec& x, const Vec& y) {
    const std::size_t n = sc.dim();
    Vec r = zero_vec(*sc.field, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            axpy(r, x[i] * y[j], sc.brackets[i * n + j]);
        }
    }
    return r;
}

Matrix ad_matrix(const StructureConstants& sc, const Vec& x) {
    const std::size_t n = sc.dim();
    Matrix m(*sc.field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& b = sc.brackets[i * n + j];
            for (std::size_t k = 0; k < n; ++k)
                if (!b[k].is_zero()) m.at(k, j) += x[i] * b[k];
        }
    }
    return m;
}

ValidationReport failure(std::string check, std::vector<std::size_t> idx, std::string detail) {
    return {false, std::move(check), std::move(idx), std::move(detail)};
}

}  // namespace

ValidationReport validate(const StructureConstants& sc) {
    if (!sc.field) return failure("shape", {}, "no field");
    const Field& f = *sc.field;
    if (!f.is_field()) return failure("shape", {}, "structure constants must lie in a field, not " + f.name());
    const std::size_t n = sc.dim();
    if (sc.brackets.size() != n * n || sc.ppowers.size() != n)
        return failure("shape", {}, "expected " + std::to_string(n * n) + " brackets and " + std::to_string(n) +
                                        " p-powers");
    auto shaped = [&](const Vec& v) {
        if (v.size() != n) return false;
        for (const auto& x : v)
            if (&x.field() != &f) return false;
        return true;
    };
    for (const auto& v : sc.brackets)
        if (!shaped(v)) return failure("shape", {}, "bracket vector of wrong length or field");
    for (const auto& v : sc.ppowers)
        if (!shaped(v)) return failure("shape", {}, "p-power vector of wrong length or field");

    auto name = [&](std::size_t i) { return sc.labels[i]; };
    auto fmt = [&](const Vec& v) { return format_combination(v, sc.labels); };

    for (std::size_t i = 0; i < n; ++i) {
        if (!is_zero(sc.brackets[i * n + i]))
            return failure("alternating", {i, i},
                           "[" + name(i) + "," + name(i) + "] = " + fmt(sc.brackets[i * n + i]) + " is not 0");
        for (std::size_t j = i + 1; j < n; ++j)
            if (!is_zero(add(sc.brackets[i * n + j], sc.brackets[j * n + i])))
                return failure("alternating", {i, j},
                               "[" + name(i) + "," + name(j) + "] = " + fmt(sc.brackets[i * n + j]) + " but [" +
                                   name(j) + "," + name(i) + "] = " + fmt(sc.brackets[j * n + i]));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec ei = unit_vec(f, n, i), ej = unit_vec(f, n, j), ek = unit_vec(f, n, k);
                const Vec s = add(add(combine(sc, ei, sc.brackets[j * n + k]), combine(sc, ej, sc.brackets[k * n + i])),
                                  combine(sc, ek, sc.brackets[i * n + j]));
                if (!is_zero(s))
                    return failure("jacobi", {i, j, k},
                                   "Jacobi sum for (" + name(i) + "," + name(j) + "," + name(k) + ") is " + fmt(s));
            }
    const std::uint32_t p = f.characteristic();
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix lhs = ad_matrix(sc, sc.ppowers[i]);
        const Matrix rhs = ad_matrix(sc, unit_vec(f, n, i)).pow(p);
        if (lhs == rhs) continue;
        for (std::size_t j = 0; j < n; ++j) {
            const Vec a = lhs.column(j), b = rhs.column(j);
            if (a != b)
                return failure("restrictedness", {i, j},
                               "ad(" + name(i) + "^[p])(" + name(j) + ") = " + fmt(a) + " but ad(" + name(i) + ")^p(" +
                                   name(j) + ") = " + fmt(b));
        }
    }
    return {};
}

RestrictedLieAlgebra::RestrictedLieAlgebra(StructureConstants sc) : sc_(std::move(sc)) {
    const ValidationReport r = validate(sc_);
    if (!r.ok) throw InvalidAlgebra(r.failed_check + ": " + r.detail);
    build_ad();
}

RestrictedLieAlgebra::RestrictedLieAlgebra(StructureConstants sc, Trusted) : sc_(std::move(sc)) { build_ad(); }

RestrictedLieAlgebra RestrictedLieAlgebra::trusted(StructureConstants sc) {
    return RestrictedLieAlgebra(std::move(sc), Trusted{});
}

void RestrictedLieAlgebra::build_ad() {
    ad_.clear();
    for (std::size_t i = 0; i < dim(); ++i) ad_.push_back(ad_matrix(sc_, basis(i)));
}

Vec RestrictedLieAlgebra::bracket(const Vec& x, const Vec& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("element length differs from algebra dimension");
    const Field* target = &field();
    if (n && x[0].field().kind() == FieldKind::coordinate_ring) target = &x[0].field();
    if (n && y[0].field().kind() == FieldKind::coordinate_ring) target = &y[0].field();
    Vec r = zero_vec(*target, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Vec& b = sc_.brackets[i * n + j];
            const Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!b[k].is_zero()) r[k] += c * b[k];
        }
    }
    return r;
}

Matrix RestrictedLieAlgebra::ad(const Vec& x) const {
    if (x.size() != dim()) throw DimensionMismatch("element length differs from algebra dimension");
    return ad_matrix(sc_, x);
}

Vec RestrictedLieAlgebra::jacobson_cross_terms(const Vec& a, const Vec& b) const {
    const std::uint32_t p = field().characteristic();
    const Field& target = a.empty() ? field() : (a[0].field().kind() == FieldKind::coordinate_ring ? a[0].field()
                                                                                                    : b[0].field());
    // poly[d] is the coefficient of lambda^d.
    std::vector<Vec> poly{a};
    for (std::uint32_t step = 0; step + 1 < p; ++step) {
        std::vector<Vec> next(poly.size() + 1, zero_vec(target, dim()));
        for (std::size_t d = 0; d < poly.size(); ++d) {
            if (is_zero(poly[d])) continue;
            next[d + 1] = add(next[d + 1], bracket(a, poly[d]));
            next[d] = add(next[d], bracket(b, poly[d]));
        }
        poly = std::move(next);
    }
    Vec r = zero_vec(target, dim());
    for (std::uint32_t i = 1; i < p; ++i) {
        if (i - 1 >= poly.size()) break;
        axpy(r, target.from_int(modp::inv(i, p)), poly[i - 1]);
    }
    return r;
}

Vec RestrictedLieAlgebra::p_power(const Vec& x) const {
    const std::size_t n = dim();
    if (x.size() != n) throw DimensionMismatch("element length differs from algebra dimension");
    const Field& target = n ? x[0].field() : field();
    const std::uint32_t p = field().characteristic();
    Vec acc = zero_vec(target, n), accp = zero_vec(target, n);
    bool first = true;
    for (std::size_t k = 0; k < n; ++k) {
        if (x[k].is_zero()) continue;
        Vec term = zero_vec(target, n);
        term[k] = x[k];
        Vec termp = zero_vec(target, n);
        axpy(termp, x[k].pow(p), sc_.ppowers[k]);
        if (first) {
            accp = std::move(termp);
            first = false;
        } else {
            accp = add(add(accp, termp), jacobson_cross_terms(acc, term));
        }
        acc[k] = x[k];
    }
    return accp;
}

Matrix RestrictedLieAlgebra::p_matrix() const { return Matrix::from_columns(field(), dim(), sc_.ppowers); }

bool RestrictedLieAlgebra::is_abelian() const {
    for (const auto& b : sc_.brackets)
        if (!is_zero(b)) return false;
    return true;
}

}  // namespace radu
