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

#include "radu/univariate.hpp"

#include <algorithm>

#include "radu/errors.hpp"

namespace radu {

UPoly::UPoly(const Field& f, std::vector<Scalar> coeffs) : field_(&f), c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_ring_element(const Scalar& x) {
    const Field& ring = x.field();
    if (ring.kind() != FieldKind::coordinate_ring || ring.variables().size() != 1)
        throw UnsupportedKind("expected a one-variable coordinate ring, got " + ring.name());
    const Field& base = ring.base();
    std::vector<Scalar> c;
    for (const auto& t : x.mpoly().terms) {
        const std::size_t e = t.exps[0];
        if (c.size() <= e) c.resize(e + 1, base.zero());
        c[e] = t.coeff;
    }
    return UPoly(base, std::move(c));
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UPoly(*field_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UPoly(*field_, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(*field_);
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, field_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UPoly(*field_, std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    const Scalar inv = leading().inverse();
    std::vector<Scalar> r;
    for (const auto& x : c_) r.push_back(x * inv);
    return UPoly(*field_, std::move(r));
}

Scalar UPoly::evaluate(const Scalar& x) const {
    Scalar r = field_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += c_[i].to_string();
            continue;
        }
        if (!c_[i].is_one()) s += c_[i].to_factor_string() + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {UPoly(f), a};
    std::vector<Scalar> rem = a.coefficients();
    std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), f.zero());
    const Scalar inv = b.leading().inverse();
    const auto& bc = b.coefficients();
    for (long i = a.degree() - b.degree(); i >= 0; --i) {
        const Scalar c = rem[static_cast<std::size_t>(i) + bc.size() - 1] * inv;
        q[static_cast<std::size_t>(i)] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= c * bc[j];
    }
    return {UPoly(f, std::move(q)), UPoly(f, std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

namespace {

// Candidate roots over F_p(t): c * u / v with u | a_0 and v | a_d monic.
bool rational_candidates(const UPoly& f, std::uint64_t budget, std::vector<Scalar>& out) {
    const Field& F = f.field();
    const auto p = F.characteristic();
    // Clear denominators.
    FpPoly common = FpPoly::constant(p, 1);
    for (const auto& c : f.coefficients())
        if (!c.is_zero()) common = divmod(common * c.denominator(), gcd(common, c.denominator())).first;
    const Scalar scale = make_rational(F, common, FpPoly::constant(p, 1));
    std::size_t low = 0;
    while (f.coefficients()[low].is_zero()) ++low;
    const FpPoly a0 = (f.coefficients()[low] * scale).numerator();
    const FpPoly ad = (f.leading() * scale).numerator();
    std::vector<FpPoly> us, vs;
    if (!monic_divisors(a0, us, budget) || !monic_divisors(ad, vs, budget)) return false;
    if (static_cast<std::uint64_t>(us.size()) * vs.size() * (p - 1) > budget) return false;
    for (const auto& u : us)
        for (const auto& v : vs)
            for (std::uint32_t c = 1; c < p; ++c) out.push_back(make_rational(F, u.scaled(c), v));
    return true;
}

}  // namespace

std::optional<std::vector<std::pair<Scalar, unsigned>>> roots(const UPoly& f, std::uint64_t budget) {
    if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    const Field& F = f.field();
    std::vector<Scalar> candidates;
    if (f.coefficients()[0].is_zero()) candidates.push_back(F.zero());
    if (F.is_finite()) {
        if (F.order() > budget) return std::nullopt;
        for (std::uint64_t i = 1; i < F.order(); ++i) candidates.push_back(F.element(i));
    } else if (F.kind() == FieldKind::rational_function) {
        if (f.degree() > 0 && !rational_candidates(f, budget, candidates)) return std::nullopt;
    } else {
        throw UnsupportedKind("root finding over " + F.name());
    }
    std::vector<std::pair<Scalar, unsigned>> out;
    UPoly rest = f;
    for (const auto& r : candidates) {
        if (std::any_of(out.begin(), out.end(), [&](const auto& e) { return e.first == r; })) continue;
        const UPoly lin(F, {-r, F.one()});
        unsigned mult = 0;
        for (;;) {
            auto [q, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        if (mult) out.emplace_back(r, mult);
    }
    return out;
}

}  // namespace radu
