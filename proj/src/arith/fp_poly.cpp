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

#include "radu/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace radu {

namespace modp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t result = 1 % p, base = a % p;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero residue");
    long long t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t, p);
}

std::uint32_t reduce(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace modp

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::uint32_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(std::uint32_t p, std::uint32_t c, std::size_t degree) {
    std::vector<std::uint32_t> v(degree + 1, 0);
    v[degree] = c;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t FpPoly::term_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](auto c) { return c != 0; }));
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    FpPoly r(p_ ? p_ : o.p_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = modp::add(coefficient(i), o.coefficient(i), r.p_);
    r.trim();
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    FpPoly r(p_ ? p_ : o.p_);
    r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = modp::sub(coefficient(i), o.coefficient(i), r.p_);
    r.trim();
    return r;
}

FpPoly FpPoly::operator-() const {
    FpPoly r = *this;
    for (auto& c : r.c_) c = modp::neg(c, p_);
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    FpPoly r(p_ ? p_ : o.p_);
    if (is_zero() || o.is_zero()) return r;
    std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
    const std::uint64_t p = r.p_;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{c_[i]} * o.c_[j]) % p;
    }
    r.c_.assign(acc.begin(), acc.end());
    r.trim();
    return r;
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
    FpPoly r = *this;
    for (auto& x : r.c_) x = modp::mul(x, c % p_, p_);
    r.trim();
    return r;
}

FpPoly FpPoly::pow(std::uint64_t e) const {
    FpPoly result = constant(p_, 1), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(modp::inv(leading(), p_));
}

FpPoly FpPoly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    FpPoly r(p_);
    r.c_.assign(k, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

FpPoly FpPoly::expand(std::size_t q) const {
    if (is_zero() || q == 1) return *this;
    FpPoly r(p_);
    r.c_.assign((c_.size() - 1) * q + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * q] = c_[i];
    return r;
}

bool FpPoly::is_expansion_of(std::size_t q) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0 && i % q != 0) return false;
    return true;
}

FpPoly FpPoly::contract(std::size_t q) const {
    if (!is_expansion_of(q)) throw std::invalid_argument("polynomial is not a polynomial in t^q");
    FpPoly r(p_);
    if (is_zero()) return r;
    r.c_.assign((c_.size() - 1) / q + 1, 0);
    for (std::size_t i = 0; i < c_.size(); i += q) r.c_[i / q] = c_[i];
    return r;
}

std::uint32_t FpPoly::evaluate(std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = modp::add(modp::mul(acc, x, p_), *it, p_);
    return acc;
}

bool FpPoly::operator<(const FpPoly& o) const noexcept {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

std::string FpPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const auto c = c_[k];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::uint32_t p = b.modulus();
    std::vector<std::uint32_t> rem = a.coefficients();
    const auto& bc = b.coefficients();
    if (rem.size() < bc.size()) return {FpPoly(p), a};
    std::vector<std::uint32_t> quot(rem.size() - bc.size() + 1, 0);
    const std::uint32_t lead_inv = modp::inv(b.leading(), p);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const std::uint32_t coef = modp::mul(rem[k + bc.size() - 1], lead_inv, p);
        quot[k] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            rem[k + j] = modp::sub(rem[k + j], modp::mul(coef, bc[j], p), p);
    }
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

namespace {

// Enumerates monic polynomials of the given degree in lexicographic order of coefficient vectors.
bool next_monic(std::vector<std::uint32_t>& c, std::uint32_t p) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (++c[i] < p) return true;
        c[i] = 0;
    }
    return false;
}

}  // namespace

bool factor_by_trial_division(const FpPoly& f, std::vector<std::pair<FpPoly, unsigned>>& out, std::uint64_t budget) {
    out.clear();
    if (f.is_zero()) throw std::invalid_argument("factorization of zero polynomial");
    const std::uint32_t p = f.modulus();
    FpPoly rest = f.monic();
    std::uint64_t spent = 0;
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(std::max(rest.degree(), 0L)); ++d) {
        std::vector<std::uint32_t> c(d + 1, 0);
        c[d] = 1;
        do {
            if (++spent > budget) return false;
            FpPoly cand(p, c);
            unsigned mult = 0;
            for (;;) {
                auto [q, r] = divmod(rest, cand);
                if (!r.is_zero()) break;
                rest = std::move(q);
                ++mult;
            }
            if (mult) out.emplace_back(std::move(cand), mult);
            if (2 * d > static_cast<std::size_t>(std::max(rest.degree(), 0L))) break;
        } while (next_monic(c, p));
    }
    if (rest.degree() > 0) out.emplace_back(rest, 1);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    // merge equal factors that appeared both as trial divisor and as remainder
    std::vector<std::pair<FpPoly, unsigned>> merged;
    for (auto& item : out) {
        if (!merged.empty() && merged.back().first == item.first)
            merged.back().second += item.second;
        else
            merged.push_back(std::move(item));
    }
    out = std::move(merged);
    return true;
}

bool monic_divisors(const FpPoly& f, std::vector<FpPoly>& out, std::uint64_t budget) {
    std::vector<std::pair<FpPoly, unsigned>> factors;
    if (!factor_by_trial_division(f, factors, budget)) return false;
    out.assign(1, FpPoly::constant(f.modulus(), 1));
    for (const auto& [fac, mult] : factors) {
        const std::size_t prev = out.size();
        FpPoly power = fac;
        for (unsigned k = 1; k <= mult; ++k) {
            for (std::size_t i = 0; i < prev; ++i) out.push_back(out[i] * power);
            power = power * fac;
        }
    }
    std::sort(out.begin(), out.end());
    return true;
}

bool is_irreducible(const FpPoly& f) {
    if (f.degree() < 1) return false;
    std::vector<std::pair<FpPoly, unsigned>> factors;
    if (!factor_by_trial_division(f, factors)) throw std::runtime_error("irreducibility test exceeded budget");
    return factors.size() == 1 && factors[0].second == 1;
}

}  // namespace radu
