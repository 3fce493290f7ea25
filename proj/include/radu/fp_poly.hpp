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

#ifndef RADU_FP_POLY_HPP
#define RADU_FP_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace radu {

/// Residue arithmetic modulo a prime that fits in 32 bits.
namespace modp {
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + (p - b); }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(long long v, std::uint32_t p);
bool is_prime(std::uint64_t n);
}  // namespace modp

/// Dense univariate polynomial over F_p, lowest degree first, no trailing zeros.
class FpPoly {
   public:
    FpPoly() = default;
    explicit FpPoly(std::uint32_t p) : p_(p) {}
    FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

    static FpPoly constant(std::uint32_t p, std::uint32_t c);
    static FpPoly monomial(std::uint32_t p, std::uint32_t c, std::size_t degree);

    std::uint32_t modulus() const noexcept { return p_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    std::uint32_t coefficient(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint32_t>& coefficients() const noexcept { return c_; }
    std::size_t term_count() const noexcept;

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator-() const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scaled(std::uint32_t c) const;
    FpPoly pow(std::uint64_t e) const;
    FpPoly monic() const;
    FpPoly shifted(std::size_t k) const;  // multiply by t^k

    /// Substitute t -> t^q.
    FpPoly expand(std::size_t q) const;
    /// Inverse of expand: defined when every exponent with nonzero coefficient is divisible by q.
    bool is_expansion_of(std::size_t q) const;
    FpPoly contract(std::size_t q) const;

    std::uint32_t evaluate(std::uint32_t x) const;

    bool operator==(const FpPoly& o) const noexcept { return c_ == o.c_; }
    bool operator!=(const FpPoly& o) const noexcept { return !(*this == o); }
    /// Total order used only for deterministic sorting.
    bool operator<(const FpPoly& o) const noexcept;

    std::string to_string(const std::string& var) const;

   private:
    void trim();

    std::uint32_t p_ = 0;
    std::vector<std::uint32_t> c_;
};

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b);

/// Monic irreducible factors with multiplicity, by trial division.
/// Returns false when the trial budget would be exceeded.
bool factor_by_trial_division(const FpPoly& f, std::vector<std::pair<FpPoly, unsigned>>& out,
                              std::uint64_t budget = 2'000'000);

/// All monic divisors of a nonzero polynomial (requires successful factorization).
bool monic_divisors(const FpPoly& f, std::vector<FpPoly>& out, std::uint64_t budget = 2'000'000);

bool is_irreducible(const FpPoly& f);

}  // namespace radu

#endif
