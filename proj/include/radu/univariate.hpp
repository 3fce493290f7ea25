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

#ifndef RADU_UNIVARIATE_HPP
#define RADU_UNIVARIATE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radu/field.hpp"

namespace radu {

/// Dense polynomial in one auxiliary variable over a Field, lowest degree first.
class UPoly {
   public:
    explicit UPoly(const Field& f) : field_(&f) {}
    UPoly(const Field& f, std::vector<Scalar> coeffs);

    /// Reads an element of a one-variable coordinate ring over a field.
    static UPoly from_ring_element(const Scalar& x);

    const Field& field() const noexcept { return *field_; }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Scalar>& coefficients() const noexcept { return c_; }
    const Scalar& leading() const { return c_.back(); }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly monic() const;
    Scalar evaluate(const Scalar& x) const;

    bool operator==(const UPoly& o) const { return field_ == o.field_ && c_ == o.c_; }

    std::string to_string(const std::string& var) const;

   private:
    void trim();

    const Field* field_;
    std::vector<Scalar> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/**
 * Roots lying in the coefficient field, with multiplicity. Finite fields are
 * searched exhaustively; over F_p(t) candidates come from the rational root
 * theorem. nullopt when the candidate budget is exhausted. The zero polynomial
 * is rejected.
 */
std::optional<std::vector<std::pair<Scalar, unsigned>>> roots(const UPoly& f, std::uint64_t budget = 200'000);

}  // namespace radu

#endif
