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

#ifndef RADU_FIELD_HPP
#define RADU_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "radu/fp_poly.hpp"

namespace radu {

class Scalar;

enum class FieldKind { prime, galois, rational_function, coordinate_ring };

/**
 * Descriptor of an exact scalar domain of characteristic p:
 * F_p, F_{p^m} = F_p[u]/(f), the rational function field F_p(t), or a
 * polynomial coordinate ring over one of those.
 *
 * Descriptors are interned: each distinct domain exists once for the life of
 * the process, so identity comparison is domain equality. All members are
 * immutable after construction and safe to share across threads.
 */
class Field {
   public:
    static const Field& prime(std::uint32_t p);
    /// Uses the bundled irreducible modulus for (p, m); m = 1 yields prime(p).
    static const Field& galois(std::uint32_t p, std::uint32_t m);
    static const Field& rational_functions(std::uint32_t p, const std::string& variable = "t");
    /// Graded-lex ordered polynomials in the given indeterminates. The base must be a field.
    static const Field& coordinate_ring(const Field& base, const std::vector<std::string>& variables);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    FieldKind kind() const noexcept { return kind_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t extension_degree() const noexcept { return m_; }
    bool is_field() const noexcept { return kind_ != FieldKind::coordinate_ring; }
    bool is_finite() const noexcept { return kind_ == FieldKind::prime || kind_ == FieldKind::galois; }
    bool is_perfect() const noexcept { return is_finite(); }
    /// Number of elements; finite fields only.
    std::uint64_t order() const;
    /// The coefficient field of a coordinate ring; the field itself otherwise.
    const Field& base() const noexcept { return base_ ? *base_ : *this; }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const FpPoly& modulus() const noexcept { return modulus_; }
    /// Text literal: GF(2), GF(2^3), GF(2)(t), GF(2)(t)[x,y].
    const std::string& name() const noexcept { return name_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    /// t for F_p(t), u for F_{p^m}, the i-th indeterminate of a coordinate ring.
    Scalar variable(std::size_t i = 0) const;

    /// Finite fields: elements in a fixed order (index 0 is zero, index 1 is one).
    Scalar element(std::uint64_t index) const;
    std::uint64_t index_of(const Scalar& s) const;

    /// Canonical inclusion: F_p into anything of characteristic p, and a base
    /// field into its coordinate rings. Throws FieldMismatch otherwise.
    Scalar lift(const Scalar& s) const;
    bool can_lift_from(const Field& other) const noexcept;

   private:
    Field() = default;
    friend struct FieldRegistry;

    FieldKind kind_ = FieldKind::prime;
    std::uint32_t p_ = 2;
    std::uint32_t m_ = 1;
    std::vector<std::string> vars_;
    FpPoly modulus_;
    const Field* base_ = nullptr;
    std::string name_;
};

/// Bundled irreducible modulus for F_{p^m}, p in {2,3,5}, m <= 4.
std::optional<FpPoly> bundled_irreducible(std::uint32_t p, std::uint32_t m);

namespace detail {
struct RatFunc {
    FpPoly num, den;
    bool operator==(const RatFunc& o) const noexcept { return num == o.num && den == o.den; }
};
using Monomial = std::vector<std::uint32_t>;
struct MTerm;
struct MPoly {
    std::vector<MTerm> terms;  // strictly decreasing in graded-lex order, nonzero coefficients
    bool operator==(const MPoly& o) const;
};
bool grlex_less(const Monomial& a, const Monomial& b);
}  // namespace detail

/// Exact element of a Field. Representation is canonical, so equality is structural.
class Scalar {
   public:
    const Field& field() const noexcept { return *field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Exact division; in a coordinate ring only by units.
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar pow(std::uint64_t e) const;
    Scalar inverse() const;
    /// x -> x^p
    Scalar frobenius() const;
    Scalar times_int(long long k) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Parseable text.
    std::string to_string() const;
    /// As to_string, parenthesized when the text is a sum.
    std::string to_factor_string() const;

    std::uint32_t residue() const;
    const FpPoly& galois_poly() const;
    const FpPoly& numerator() const;
    const FpPoly& denominator() const;
    const detail::MPoly& mpoly() const;
    /// Coordinate ring: true when the element is a constant of the base field.
    bool is_constant() const;
    /// Coordinate ring: the constant term as a base-field scalar.
    Scalar constant_term() const;
    /// Coordinate ring: degree in the i-th indeterminate (-1 for zero).
    long degree_in(std::size_t var) const;

   private:
    friend class Field;
    friend Scalar make_rational(const Field&, FpPoly, FpPoly);
    friend Scalar make_galois(const Field&, FpPoly);
    friend Scalar make_mpoly(const Field&, detail::MPoly);

    using Rep = std::variant<std::uint32_t, FpPoly, detail::RatFunc, detail::MPoly>;
    Scalar(const Field* f, Rep r) : field_(f), rep_(std::move(r)) {}

    const Field* field_;
    Rep rep_;
};

namespace detail {
struct MTerm {
    Monomial exps;
    Scalar coeff;
    bool operator==(const MTerm& o) const { return exps == o.exps && coeff == o.coeff; }
};
}  // namespace detail

/// Reduced fraction num/den in F_p(t); den must be nonzero.
Scalar make_rational(const Field& f, FpPoly num, FpPoly den);
Scalar make_galois(const Field& f, FpPoly value);
Scalar make_mpoly(const Field& f, detail::MPoly value);

/// p-th root in the same field, or nullopt when f is not a p-th power.
/// Throws UnsupportedKind for coordinate rings.
std::optional<Scalar> pth_root(const Scalar& f);

/**
 * Writes f = sum_{j<p} t^j * g_j^p with g_j in F_p(t) and returns (g_0..g_{p-1}).
 * For perfect fields returns the single component {f^(1/p)}.
 */
std::vector<Scalar> frobenius_components(const Scalar& f);

/// Parses an element literal such as `(t^2+1)/t` or `u^2+1` or `x*y+t`.
Scalar parse_scalar(const Field& field, const std::string& text);
/// Parses `GF(p)`, `GF(p^m)`, `GF(p)(t)`, optionally followed by `[x,y,...]`.
const Field& parse_field(const std::string& text);

}  // namespace radu

#endif
