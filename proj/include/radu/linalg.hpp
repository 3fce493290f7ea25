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

#ifndef RADU_LINALG_HPP
#define RADU_LINALG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "radu/field.hpp"

namespace radu {

/// Coefficient tuple. All entries share one Field.
using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);
bool is_zero(const Vec& v);
/// Entrywise x -> x^p.
Vec frobenius(const Vec& v);
std::string to_string(const Vec& v);
/// Linear combination text such as `t*X+Y`; "0" for the zero vector.
std::string format_combination(const Vec& v, const std::vector<std::string>& labels);
/// Inverse of format_combination: `t*X+Y`, `-(t+1)*Z`, `0`. Throws ParseError.
Vec parse_combination(const Field& f, const std::vector<std::string>& labels, const std::string& text);

/// Dense row-major matrix over a Field.
class Matrix {
   public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);

    const Field& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    /// Entrywise Frobenius B -> B^(p).
    Matrix frobenius_twist() const;
    Matrix pow(std::uint64_t e) const;
    Matrix scaled(const Scalar& c) const;
    bool is_zero() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::string to_string() const;

   private:
    const Field* field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix reduced;                   // reduced row echelon form, zero rows at the bottom
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in increasing column order.
std::vector<Vec> nullspace(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/**
 * Subspace of F^n kept as its reduced row echelon basis, so two subspaces are
 * equal exactly when their bases are.
 */
class Subspace {
   public:
    Subspace(const Field& f, std::size_t ambient);

    static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace whole(const Field& f, std::size_t ambient);

    const Field& field() const noexcept { return *field_; }
    std::size_t ambient() const noexcept { return n_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    bool is_zero() const noexcept { return basis_.empty(); }
    bool is_whole() const noexcept { return basis_.size() == n_; }
    const std::vector<Vec>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// v minus its projection along the pivot columns; zero iff v is in the subspace.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    /// Coordinates of a member in the echelon basis.
    Vec coordinates(const Vec& v) const;

    Subspace sum(const Subspace& o) const;
    Subspace with(const Vec& v) const;
    Subspace intersect(const Subspace& o) const;
    /// Orthogonal complement for the standard pairing.
    Subspace annihilator() const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    std::string to_string(const std::vector<std::string>& labels) const;

   private:
    void check(const Subspace& o) const;

    const Field* field_;
    std::size_t n_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// F^n / U realized on the non-pivot coordinates of U.
struct QuotientData {
    std::vector<std::size_t> complement;  // ambient indices spanning the complement
    Matrix projection;                    // (n - dim U) x n
    Matrix section;                       // n x (n - dim U)
};

QuotientData quotient(const Subspace& u);

}  // namespace radu

#endif
