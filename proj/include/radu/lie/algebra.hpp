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

#ifndef RADU_LIE_ALGEBRA_HPP
#define RADU_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "radu/linalg.hpp"

namespace radu {

/// Raw data of a restricted Lie algebra on a basis e_1..e_n.
struct StructureConstants {
    const Field* field = nullptr;
    std::vector<std::string> labels;
    std::vector<Vec> brackets;  // n*n entries, brackets[i*n+j] = [e_i, e_j]
    std::vector<Vec> ppowers;   // e_i^[p]

    std::size_t dim() const noexcept { return labels.size(); }
    /// Zero brackets and zero p-powers with the given labels.
    static StructureConstants zero(const Field& f, std::vector<std::string> labels);
    void set_bracket(std::size_t i, std::size_t j, const Vec& v);  // also sets [e_j,e_i] = -v
};

struct ValidationReport {
    bool ok = true;
    std::string failed_check;  // alternating, jacobi, restrictedness, shape
    std::vector<std::size_t> indices;
    std::string detail;
};

/// Checks the alternating law, the Jacobi identity, and ad(e_i^[p]) = ad(e_i)^p.
ValidationReport validate(const StructureConstants& sc);

/// A validated restricted Lie algebra. Values are immutable.
class RestrictedLieAlgebra {
   public:
    /// Validates and throws InvalidAlgebra on failure.
    explicit RestrictedLieAlgebra(StructureConstants sc);
    /// Skips validation; for data derived from an already validated algebra.
    static RestrictedLieAlgebra trusted(StructureConstants sc);

    const Field& field() const noexcept { return *sc_.field; }
    std::size_t dim() const noexcept { return sc_.dim(); }
    const std::vector<std::string>& labels() const noexcept { return sc_.labels; }
    const StructureConstants& constants() const noexcept { return sc_; }

    Vec basis(std::size_t i) const { return unit_vec(field(), dim(), i); }
    const Vec& basis_bracket(std::size_t i, std::size_t j) const { return sc_.brackets[i * dim() + j]; }
    const Vec& basis_ppower(std::size_t i) const { return sc_.ppowers[i]; }

    /// Bilinear bracket. Coefficients may live in a coordinate ring over the field.
    Vec bracket(const Vec& x, const Vec& y) const;
    /// Matrix of ad(x) = [x, -]; column j is [x, e_j].
    Matrix ad(const Vec& x) const;
    const Matrix& ad_basis(std::size_t i) const { return ad_[i]; }
    /// Jacobson p-operation.
    Vec p_power(const Vec& x) const;
    /// (a+b)^[p] - a^[p] - b^[p], computed from ad(la+b)^(p-1)(a).
    Vec jacobson_cross_terms(const Vec& a, const Vec& b) const;
    /// Columns e_i^[p]: on an abelian algebra the p-map is lambda -> B lambda^(p).
    Matrix p_matrix() const;
    bool is_abelian() const;

    std::string format(const Vec& v) const { return format_combination(v, sc_.labels); }
    std::string format(const Subspace& s) const { return s.to_string(sc_.labels); }
    Subspace span(const std::vector<Vec>& vectors) const { return Subspace::span(field(), dim(), vectors); }
    Subspace zero_subspace() const { return Subspace(field(), dim()); }
    Subspace whole() const { return Subspace::whole(field(), dim()); }

   private:
    struct Trusted {};
    RestrictedLieAlgebra(StructureConstants sc, Trusted);
    void build_ad();

    StructureConstants sc_;
    std::vector<Matrix> ad_;
};

}  // namespace radu

#endif
