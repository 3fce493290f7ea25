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

#include "radu/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

#include "radu/errors.hpp"

namespace radu {

std::optional<FpPoly> bundled_irreducible(std::uint32_t p, std::uint32_t m) {
    // Conway polynomials, coefficients lowest degree first.
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
        {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},       {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 2}, {2, 4, 1}},       {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
    };
    auto it = table.find({p, m});
    if (it == table.end()) return std::nullopt;
    return FpPoly(p, it->second);
}

struct FieldRegistry {
    std::mutex mu;
    std::map<std::string, std::unique_ptr<Field>> fields;

    static FieldRegistry& instance() {
        static FieldRegistry reg;
        return reg;
    }

    template <class Init>
    const Field& intern(const std::string& key, Init init) {
        std::lock_guard lock(mu);
        auto it = fields.find(key);
        if (it != fields.end()) return *it->second;
        std::unique_ptr<Field> f(new Field());
        init(*f);
        f->name_ = key;
        return *fields.emplace(key, std::move(f)).first->second;
    }
};

namespace {

void require_prime(std::uint32_t p) {
    if (!modp::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
}

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

const Field& Field::prime(std::uint32_t p) {
    require_prime(p);
    return FieldRegistry::instance().intern("GF(" + std::to_string(p) + ")", [&](Field& f) {
        f.kind_ = FieldKind::prime;
        f.p_ = p;
    });
}

const Field& Field::galois(std::uint32_t p, std::uint32_t m) {
    require_prime(p);
    if (m == 0) throw std::invalid_argument("extension degree must be positive");
    if (m == 1) return prime(p);
    auto modulus = bundled_irreducible(p, m);
    if (!modulus)
        throw std::invalid_argument("no bundled irreducible polynomial for GF(" + std::to_string(p) + "^" +
                                    std::to_string(m) + ")");
    return FieldRegistry::instance().intern("GF(" + std::to_string(p) + "^" + std::to_string(m) + ")", [&](Field& f) {
        f.kind_ = FieldKind::galois;
        f.p_ = p;
        f.m_ = m;
        f.vars_ = {"u"};
        f.modulus_ = *modulus;
    });
}

const Field& Field::rational_functions(std::uint32_t p, const std::string& variable) {
    require_prime(p);
    if (!valid_identifier(variable)) throw std::invalid_argument("invalid variable name '" + variable + "'");
    return FieldRegistry::instance().intern("GF(" + std::to_string(p) + ")(" + variable + ")", [&](Field& f) {
        f.kind_ = FieldKind::rational_function;
        f.p_ = p;
        f.vars_ = {variable};
    });
}

const Field& Field::coordinate_ring(const Field& base, const std::vector<std::string>& variables) {
    if (!base.is_field()) throw UnsupportedKind("coordinate ring base must be a field");
    if (variables.empty()) throw std::invalid_argument("coordinate ring needs at least one indeterminate");
    std::string key = base.name() + "[";
    for (std::size_t i = 0; i < variables.size(); ++i) {
        const auto& v = variables[i];
        if (!valid_identifier(v)) throw std::invalid_argument("invalid indeterminate name '" + v + "'");
        if (std::find(base.variables().begin(), base.variables().end(), v) != base.variables().end() ||
            std::find(variables.begin(), variables.begin() + static_cast<long>(i), v) != variables.begin() + static_cast<long>(i))
            throw std::invalid_argument("indeterminate name '" + v + "' clashes");
        key += (i ? "," : "") + v;
    }
    key += "]";
    return FieldRegistry::instance().intern(key, [&](Field& f) {
        f.kind_ = FieldKind::coordinate_ring;
        f.p_ = base.characteristic();
        f.vars_ = variables;
        f.base_ = &base;
    });
}

std::uint64_t Field::order() const {
    if (!is_finite()) throw UnsupportedKind(name_ + " is infinite");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m_; ++i) q *= p_;
    return q;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    const std::uint32_t r = modp::reduce(v, p_);
    switch (kind_) {
        case FieldKind::prime:
            return Scalar(this, r);
        case FieldKind::galois:
            return Scalar(this, FpPoly::constant(p_, r));
        case FieldKind::rational_function:
            return Scalar(this, detail::RatFunc{FpPoly::constant(p_, r), FpPoly::constant(p_, 1)});
        case FieldKind::coordinate_ring: {
            detail::MPoly mp;
            if (r != 0) mp.terms.push_back({detail::Monomial(vars_.size(), 0), base_->from_int(r)});
            return Scalar(this, std::move(mp));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Field::variable(std::size_t i) const {
    switch (kind_) {
        case FieldKind::prime:
            throw UnsupportedKind(name_ + " has no generator");
        case FieldKind::galois:
            return make_galois(*this, FpPoly(p_, {0, 1}));
        case FieldKind::rational_function:
            return Scalar(this, detail::RatFunc{FpPoly(p_, {0, 1}), FpPoly::constant(p_, 1)});
        case FieldKind::coordinate_ring: {
            if (i >= vars_.size()) throw std::out_of_range("indeterminate index");
            detail::Monomial e(vars_.size(), 0);
            e[i] = 1;
            detail::MPoly mp;
            mp.terms.push_back({std::move(e), base_->one()});
            return Scalar(this, std::move(mp));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Field::element(std::uint64_t index) const {
    if (!is_finite()) throw UnsupportedKind(name_ + " is infinite");
    if (index >= order()) throw std::out_of_range("field element index");
    if (kind_ == FieldKind::prime) return Scalar(this, static_cast<std::uint32_t>(index));
    std::vector<std::uint32_t> c(m_);
    for (auto& x : c) {
        x = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return Scalar(this, FpPoly(p_, std::move(c)));
}

std::uint64_t Field::index_of(const Scalar& s) const {
    if (&s.field() != this) throw FieldMismatch("element of " + s.field().name() + " indexed in " + name_);
    if (kind_ == FieldKind::prime) return s.residue();
    if (kind_ != FieldKind::galois) throw UnsupportedKind(name_ + " is infinite");
    std::uint64_t idx = 0;
    const auto& c = s.galois_poly().coefficients();
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * p_ + c[i];
    return idx;
}

bool Field::can_lift_from(const Field& other) const noexcept {
    if (&other == this) return true;
    if (other.kind_ == FieldKind::prime && other.p_ == p_) return true;
    if (kind_ == FieldKind::coordinate_ring) return base_->can_lift_from(other);
    return false;
}

Scalar Field::lift(const Scalar& s) const {
    const Field& src = s.field();
    if (&src == this) return s;
    if (src.kind_ == FieldKind::prime && src.p_ == p_) return from_int(s.residue());
    if (kind_ == FieldKind::coordinate_ring && base_->can_lift_from(src)) {
        Scalar c = base_->lift(s);
        detail::MPoly mp;
        if (!c.is_zero()) mp.terms.push_back({detail::Monomial(vars_.size(), 0), std::move(c)});
        return Scalar(this, std::move(mp));
    }
    throw FieldMismatch("cannot embed " + src.name() + " into " + name_);
}

// ---------------------------------------------------------------------------

namespace detail {

bool MPoly::operator==(const MPoly& o) const { return terms == o.terms; }

bool grlex_less(const Monomial& a, const Monomial& b) {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return a < b;
}

}  // namespace detail

Scalar make_rational(const Field& f, FpPoly num, FpPoly den) {
    if (f.kind() != FieldKind::rational_function) throw UnsupportedKind(f.name() + " is not a rational function field");
    if (den.is_zero()) throw std::domain_error("zero denominator");
    const auto p = f.characteristic();
    if (num.is_zero()) return Scalar(&f, detail::RatFunc{FpPoly(p), FpPoly::constant(p, 1)});
    if (!den.is_constant()) {
        FpPoly g = gcd(num, den);
        if (!g.is_one()) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
    }
    if (den.leading() != 1) {
        const auto li = modp::inv(den.leading(), p);
        num = num.scaled(li);
        den = den.scaled(li);
    }
    return Scalar(&f, detail::RatFunc{std::move(num), std::move(den)});
}

Scalar make_galois(const Field& f, FpPoly value) {
    if (f.kind() != FieldKind::galois) throw UnsupportedKind(f.name() + " is not an extension field");
    if (value.degree() >= static_cast<long>(f.extension_degree())) value = divmod(value, f.modulus()).second;
    return Scalar(&f, std::move(value));
}

Scalar make_mpoly(const Field& f, detail::MPoly value) {
    if (f.kind() != FieldKind::coordinate_ring) throw UnsupportedKind(f.name() + " is not a coordinate ring");
    std::erase_if(value.terms, [](const detail::MTerm& t) { return t.coeff.is_zero(); });
    std::sort(value.terms.begin(), value.terms.end(),
              [](const detail::MTerm& a, const detail::MTerm& b) { return detail::grlex_less(b.exps, a.exps); });
    return Scalar(&f, std::move(value));
}

namespace {

detail::MPoly mpoly_add(const detail::MPoly& a, const detail::MPoly& b, bool subtract) {
    detail::MPoly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && detail::grlex_less(b.terms[j].exps, a.terms[i].exps))) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || detail::grlex_less(a.terms[i].exps, b.terms[j].exps)) {
            r.terms.push_back({b.terms[j].exps, subtract ? -b.terms[j].coeff : b.terms[j].coeff});
            ++j;
        } else {
            Scalar c = subtract ? a.terms[i].coeff - b.terms[j].coeff : a.terms[i].coeff + b.terms[j].coeff;
            if (!c.is_zero()) r.terms.push_back({a.terms[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

detail::MPoly mpoly_mul(const detail::MPoly& a, const detail::MPoly& b) {
    std::vector<detail::MTerm> acc;
    for (const auto& x : a.terms)
        for (const auto& y : b.terms) {
            detail::Monomial e(x.exps.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = x.exps[k] + y.exps[k];
            acc.push_back({std::move(e), x.coeff * y.coeff});
        }
    std::sort(acc.begin(), acc.end(),
              [](const detail::MTerm& s, const detail::MTerm& t) { return detail::grlex_less(t.exps, s.exps); });
    detail::MPoly r;
    for (auto& t : acc) {
        if (!r.terms.empty() && r.terms.back().exps == t.exps)
            r.terms.back().coeff += t.coeff;
        else
            r.terms.push_back(std::move(t));
    }
    std::erase_if(r.terms, [](const detail::MTerm& t) { return t.coeff.is_zero(); });
    return r;
}

FpPoly galois_reduce(const Field& f, const FpPoly& v) {
    if (v.degree() < static_cast<long>(f.extension_degree())) return v;
    return divmod(v, f.modulus()).second;
}

bool contains_top_level_plus(const std::string& s) {
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == '+' && depth == 0) return true;
    }
    return false;
}

}  // namespace

bool Scalar::is_zero() const {
    switch (rep_.index()) {
        case 0: return std::get<0>(rep_) == 0;
        case 1: return std::get<1>(rep_).is_zero();
        case 2: return std::get<2>(rep_).num.is_zero();
        default: return std::get<3>(rep_).terms.empty();
    }
}

bool Scalar::is_one() const {
    switch (rep_.index()) {
        case 0: return std::get<0>(rep_) == 1;
        case 1: return std::get<1>(rep_).is_one();
        case 2: return std::get<2>(rep_).num.is_one() && std::get<2>(rep_).den.is_one();
        default: {
            const auto& t = std::get<3>(rep_).terms;
            return t.size() == 1 && std::all_of(t[0].exps.begin(), t[0].exps.end(), [](auto e) { return e == 0; }) &&
                   t[0].coeff.is_one();
        }
    }
}

namespace {

template <class Op>
Scalar coerce_apply(const Scalar& a, const Scalar& b, Op op) {
    if (a.field().can_lift_from(b.field())) return op(a, a.field().lift(b));
    if (b.field().can_lift_from(a.field())) return op(b.field().lift(a), b);
    throw FieldMismatch("scalars from " + a.field().name() + " and " + b.field().name());
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    if (field_ != o.field_) return coerce_apply(*this, o, [](const Scalar& x, const Scalar& y) { return x + y; });
    const auto p = field_->characteristic();
    switch (rep_.index()) {
        case 0: return Scalar(field_, modp::add(std::get<0>(rep_), std::get<0>(o.rep_), p));
        case 1: return Scalar(field_, std::get<1>(rep_) + std::get<1>(o.rep_));
        case 2: {
            const auto& a = std::get<2>(rep_);
            const auto& b = std::get<2>(o.rep_);
            if (a.den == b.den) return make_rational(*field_, a.num + b.num, a.den);
            return make_rational(*field_, a.num * b.den + b.num * a.den, a.den * b.den);
        }
        default: return Scalar(field_, mpoly_add(std::get<3>(rep_), std::get<3>(o.rep_), false));
    }
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (field_ != o.field_) return coerce_apply(*this, o, [](const Scalar& x, const Scalar& y) { return x - y; });
    const auto p = field_->characteristic();
    switch (rep_.index()) {
        case 0: return Scalar(field_, modp::sub(std::get<0>(rep_), std::get<0>(o.rep_), p));
        case 1: return Scalar(field_, std::get<1>(rep_) - std::get<1>(o.rep_));
        case 2: {
            const auto& a = std::get<2>(rep_);
            const auto& b = std::get<2>(o.rep_);
            if (a.den == b.den) return make_rational(*field_, a.num - b.num, a.den);
            return make_rational(*field_, a.num * b.den - b.num * a.den, a.den * b.den);
        }
        default: return Scalar(field_, mpoly_add(std::get<3>(rep_), std::get<3>(o.rep_), true));
    }
}

Scalar Scalar::operator-() const {
    const auto p = field_->characteristic();
    switch (rep_.index()) {
        case 0: return Scalar(field_, modp::neg(std::get<0>(rep_), p));
        case 1: return Scalar(field_, -std::get<1>(rep_));
        case 2: return Scalar(field_, detail::RatFunc{-std::get<2>(rep_).num, std::get<2>(rep_).den});
        default: {
            detail::MPoly r = std::get<3>(rep_);
            for (auto& t : r.terms) t.coeff = -t.coeff;
            return Scalar(field_, std::move(r));
        }
    }
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (field_ != o.field_) return coerce_apply(*this, o, [](const Scalar& x, const Scalar& y) { return x * y; });
    const auto p = field_->characteristic();
    switch (rep_.index()) {
        case 0: return Scalar(field_, modp::mul(std::get<0>(rep_), std::get<0>(o.rep_), p));
        case 1: return Scalar(field_, galois_reduce(*field_, std::get<1>(rep_) * std::get<1>(o.rep_)));
        case 2: {
            const auto& a = std::get<2>(rep_);
            const auto& b = std::get<2>(o.rep_);
            if (a.num.is_zero() || b.num.is_zero()) return field_->zero();
            return make_rational(*field_, a.num * b.num, a.den * b.den);
        }
        default: return Scalar(field_, mpoly_mul(std::get<3>(rep_), std::get<3>(o.rep_)));
    }
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    const auto p = field_->characteristic();
    switch (rep_.index()) {
        case 0: return Scalar(field_, modp::inv(std::get<0>(rep_), p));
        case 1: return pow(field_->order() - 2);
        case 2: return make_rational(*field_, std::get<2>(rep_).den, std::get<2>(rep_).num);
        default: {
            if (!is_constant()) throw UnsupportedKind("non-constant element of " + field_->name() + " is not invertible");
            return field_->lift(constant_term().inverse());
        }
    }
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (field_ != o.field_) return coerce_apply(*this, o, [](const Scalar& x, const Scalar& y) { return x / y; });
    return *this * o.inverse();
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar result = field_->one(), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Scalar Scalar::frobenius() const {
    const auto p = field_->characteristic();
    switch (rep_.index()) {
        case 0: return *this;
        case 1: return pow(p);
        case 2: return Scalar(field_, detail::RatFunc{std::get<2>(rep_).num.expand(p), std::get<2>(rep_).den.expand(p)});
        default: {
            detail::MPoly r = std::get<3>(rep_);
            for (auto& t : r.terms) {
                for (auto& e : t.exps) e *= p;
                t.coeff = t.coeff.frobenius();
            }
            return Scalar(field_, std::move(r));
        }
    }
}

Scalar Scalar::times_int(long long k) const { return *this * field_->from_int(k); }

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) {
        if (field_->can_lift_from(*o.field_)) return *this == field_->lift(o);
        if (o.field_->can_lift_from(*field_)) return o.field_->lift(*this) == o;
        return false;
    }
    return rep_ == o.rep_;
}

std::uint32_t Scalar::residue() const {
    if (rep_.index() != 0) throw UnsupportedKind("residue() on " + field_->name());
    return std::get<0>(rep_);
}

const FpPoly& Scalar::galois_poly() const {
    if (rep_.index() != 1) throw UnsupportedKind("galois_poly() on " + field_->name());
    return std::get<1>(rep_);
}

const FpPoly& Scalar::numerator() const {
    if (rep_.index() != 2) throw UnsupportedKind("numerator() on " + field_->name());
    return std::get<2>(rep_).num;
}

const FpPoly& Scalar::denominator() const {
    if (rep_.index() != 2) throw UnsupportedKind("denominator() on " + field_->name());
    return std::get<2>(rep_).den;
}

const detail::MPoly& Scalar::mpoly() const {
    if (rep_.index() != 3) throw UnsupportedKind("mpoly() on " + field_->name());
    return std::get<3>(rep_);
}

bool Scalar::is_constant() const {
    if (rep_.index() != 3) return true;
    const auto& t = std::get<3>(rep_).terms;
    return t.empty() ||
           (t.size() == 1 && std::all_of(t[0].exps.begin(), t[0].exps.end(), [](auto e) { return e == 0; }));
}

Scalar Scalar::constant_term() const {
    if (rep_.index() != 3) return *this;
    const auto& t = std::get<3>(rep_).terms;
    if (!t.empty() && std::all_of(t.back().exps.begin(), t.back().exps.end(), [](auto e) { return e == 0; }))
        return t.back().coeff;
    return field_->base().zero();
}

long Scalar::degree_in(std::size_t var) const {
    const auto& t = mpoly().terms;
    if (t.empty()) return -1;
    long d = 0;
    for (const auto& term : t) d = std::max(d, static_cast<long>(term.exps.at(var)));
    return d;
}

std::string Scalar::to_string() const {
    switch (rep_.index()) {
        case 0: return std::to_string(std::get<0>(rep_));
        case 1: return std::get<1>(rep_).to_string(field_->variables()[0]);
        case 2: {
            const auto& var = field_->variables()[0];
            const auto& r = std::get<2>(rep_);
            std::string num = r.num.to_string(var);
            if (r.den.is_one()) return num;
            std::string den = r.den.to_string(var);
            if (r.num.term_count() > 1) num = "(" + num + ")";
            if (r.den.term_count() > 1 || den.find('*') != std::string::npos) den = "(" + den + ")";
            return num + "/" + den;
        }
        default: {
            const auto& terms = std::get<3>(rep_).terms;
            if (terms.empty()) return "0";
            std::string out;
            for (const auto& t : terms) {
                std::string mono;
                for (std::size_t k = 0; k < t.exps.size(); ++k) {
                    if (t.exps[k] == 0) continue;
                    if (!mono.empty()) mono += "*";
                    mono += field_->variables()[k];
                    if (t.exps[k] > 1) mono += "^" + std::to_string(t.exps[k]);
                }
                if (!out.empty()) out += "+";
                if (mono.empty())
                    out += t.coeff.to_string();
                else if (t.coeff.is_one())
                    out += mono;
                else
                    out += t.coeff.to_factor_string() + "*" + mono;
            }
            return out;
        }
    }
}

std::string Scalar::to_factor_string() const {
    std::string s = to_string();
    return contains_top_level_plus(s) ? "(" + s + ")" : s;
}

// ---------------------------------------------------------------------------

std::optional<Scalar> pth_root(const Scalar& f) {
    const Field& F = f.field();
    const auto p = F.characteristic();
    switch (F.kind()) {
        case FieldKind::prime:
            return f;
        case FieldKind::galois:
            return f.pow(F.order() / p);
        case FieldKind::rational_function: {
            const auto& num = f.numerator();
            const auto& den = f.denominator();
            if (!num.is_expansion_of(p) || !den.is_expansion_of(p)) return std::nullopt;
            return make_rational(F, num.contract(p), den.contract(p));
        }
        case FieldKind::coordinate_ring:
            break;
    }
    throw UnsupportedKind("pth_root is not defined on the coordinate ring " + F.name());
}

std::vector<Scalar> frobenius_components(const Scalar& f) {
    const Field& F = f.field();
    const auto p = F.characteristic();
    if (F.is_perfect()) return {*pth_root(f)};
    if (F.kind() != FieldKind::rational_function)
        throw UnsupportedKind("frobenius_components is not defined on " + F.name());
    // f = u/v = u v^(p-1) / v^p; split u v^(p-1) by exponent residue mod p.
    const FpPoly& v = f.denominator();
    const FpPoly w = f.numerator() * v.pow(p - 1);
    std::vector<Scalar> out;
    out.reserve(p);
    for (std::uint32_t j = 0; j < p; ++j) {
        std::vector<std::uint32_t> c;
        for (std::size_t i = j; i < w.coefficients().size(); i += p) c.push_back(w.coefficients()[i]);
        out.push_back(make_rational(F, FpPoly(p, std::move(c)), v));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

class ScalarParser {
   public:
    ScalarParser(const Field& f, const std::string& s) : field_(f), s_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                const std::size_t at = pos_;
                Scalar d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                try {
                    v = v / d;
                } catch (const UnsupportedKind&) {
                    pos_ = at;
                    fail("division by a non-unit in " + field_.name());
                }
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (eat('-')) return -unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (eat('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            return base.pow(std::stoull(s_.substr(start, pos_ - start)));
        }
        return base;
    }

    Scalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = (v * 10 + (s_[pos_] - '0')) % static_cast<long long>(field_.characteristic());
                ++pos_;
            }
            return field_.from_int(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            const auto& vars = field_.variables();
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) return field_.variable(i);
            if (field_.kind() == FieldKind::coordinate_ring) {
                const auto& bv = field_.base().variables();
                if (!bv.empty() && bv[0] == name) return field_.lift(field_.base().variable());
            }
            pos_ = start;
            fail("unknown symbol '" + name + "' in " + field_.name());
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const Field& field_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const Field& field, const std::string& text) { return ScalarParser(field, text).parse(); }

const Field& parse_field(const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "' in field literal", 1, pos + 1);
        ++pos;
    };
    auto number = [&]() -> std::uint64_t {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos || pos - start > 9) throw ParseError("expected a small integer in field literal", 1, start + 1);
        return std::stoull(text.substr(start, pos - start));
    };
    auto ident = [&]() {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        if (start == pos || std::isdigit(static_cast<unsigned char>(text[start])))
            throw ParseError("expected an identifier in field literal", 1, start + 1);
        return text.substr(start, pos - start);
    };
    skip();
    if (text.compare(pos, 2, "GF") != 0) throw ParseError("field literal must start with GF", 1, pos + 1);
    pos += 2;
    expect('(');
    const std::size_t p_at = pos;
    const auto p = number();
    std::uint64_t m = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
        ++pos;
        m = number();
    }
    expect(')');
    if (!modp::is_prime(p)) throw ParseError("characteristic " + std::to_string(p) + " is not prime", 1, p_at + 1);
    const Field* field = nullptr;
    skip();
    if (pos < text.size() && text[pos] == '(') {
        if (m != 1) throw ParseError("rational function fields are supported over prime fields only", 1, pos + 1);
        ++pos;
        auto var = ident();
        expect(')');
        field = &Field::rational_functions(static_cast<std::uint32_t>(p), var);
    } else {
        try {
            field = &Field::galois(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), 1, p_at + 1);
        }
    }
    skip();
    if (pos < text.size() && text[pos] == '[') {
        ++pos;
        std::vector<std::string> vars;
        do {
            vars.push_back(ident());
            skip();
        } while (pos < text.size() && text[pos] == ',' && ++pos);
        expect(']');
        try {
            field = &Field::coordinate_ring(*field, vars);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), 1, pos);
        }
    }
    skip();
    if (pos != text.size()) throw ParseError("trailing characters in field literal", 1, pos + 1);
    return *field;
}

}  // namespace radu
