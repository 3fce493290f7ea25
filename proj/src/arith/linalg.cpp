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

#include "radu/linalg.hpp"

#include <algorithm>
#include <cctype>

#include "radu/errors.hpp"

namespace radu {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = f.one();
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(c * x);
    return r;
}

void axpy(Vec& a, const Scalar& c, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += c * b[i];
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec frobenius(const Vec& v) {
    Vec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(x.frobenius());
    return r;
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

std::string format_combination(const Vec& v, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        if (!v[i].is_one()) s += v[i].to_factor_string() + "*";
        s += i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

Vec parse_combination(const Field& f, const std::vector<std::string>& labels, const std::string& text) {
    auto trim = [](std::string t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
        return t;
    };
    // top-level pieces, each keeping its leading sign
    std::vector<std::string> pieces{""};
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')' && --depth < 0) throw ParseError("unbalanced parenthesis in '" + text + "'");
        if (depth == 0 && (c == '+' || c == '-')) pieces.emplace_back(1, c);
        else pieces.back() += c;
    }
    if (depth != 0) throw ParseError("unbalanced parenthesis in '" + text + "'");
    Vec v = zero_vec(f, labels.size());
    bool any = false;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        std::string piece = trim(pieces[k]);
        if (k == 0 && piece.empty()) continue;
        bool negative = false;
        if (!piece.empty() && (piece[0] == '+' || piece[0] == '-')) {
            negative = piece[0] == '-';
            piece = trim(piece.substr(1));
        }
        if (piece.empty()) throw ParseError("dangling sign in '" + text + "'");
        any = true;
        // factors split at top-level '*'; exactly one basis label, or a bare 0
        std::vector<std::string> factors{""};
        depth = 0;
        for (char c : piece) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && c == '*') factors.emplace_back();
            else factors.back() += c;
        }
        Scalar coeff = negative ? -f.one() : f.one();
        std::optional<std::size_t> which;
        for (auto& raw : factors) {
            const std::string fac = trim(raw);
            const auto it = std::find(labels.begin(), labels.end(), fac);
            if (it != labels.end()) {
                if (which) throw ParseError("term '" + piece + "' names two basis elements");
                which = static_cast<std::size_t>(it - labels.begin());
            } else {
                coeff *= parse_scalar(f, fac);
            }
        }
        if (!which) {
            if (coeff.is_zero()) continue;
            throw ParseError("term '" + piece + "' has no basis element");
        }
        v[*which] += coeff;
    }
    if (!any) throw ParseError("empty linear combination");
    return v;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DimensionMismatch("column length differs from row count");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Matrix::column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(*field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec r = zero_vec(*field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::frobenius_twist() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = x.frobenius();
    return r;
}

Matrix Matrix::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw DimensionMismatch("power of a non-square matrix");
    Matrix result = identity(*field_, rows_), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + at(i, j).to_string();
        s += "]";
    }
    return s + "]";
}

// ---------------------------------------------------------------------------

Echelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
    const Echelon e = rref(m);
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(f, m.cols());
        v[free] = f.one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(r, free);
        out.push_back(std::move(v));
    }
    return out;
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar det = a.field().one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a.at(piv, c).is_zero()) ++piv;
        if (piv == n) return a.field().zero();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
            det = -det;
        }
        det *= a.at(c, c);
        const Scalar inv = a.at(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a.at(i, c).is_zero()) continue;
            const Scalar f = a.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = m.field().one();
    }
    const Echelon e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix r(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = e.reduced.at(i, n + j);
    return r;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(const Field& f, std::size_t ambient) : field_(&f), n_(ambient) {}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(f, ambient);
    if (vectors.empty()) return s;
    Echelon e = rref(Matrix::from_rows(f, ambient, vectors));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::whole(const Field& f, std::size_t ambient) {
    Subspace s(f, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.basis_.push_back(unit_vec(f, ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

void Subspace::check(const Subspace& o) const {
    if (n_ != o.n_) throw DimensionMismatch("subspaces of different ambient dimension");
    if (field_ != o.field_) throw FieldMismatch("subspaces over " + field_->name() + " and " + o.field_->name());
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != n_) throw DimensionMismatch("vector length differs from ambient dimension");
    Vec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Scalar c = r[pivots_[i]];
        if (!c.is_zero()) axpy(r, -c, basis_[i]);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return radu::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
    check(o);
    for (const auto& b : o.basis_)
        if (!contains(b)) return false;
    return true;
}

Vec Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
    Vec c;
    c.reserve(basis_.size());
    for (auto piv : pivots_) c.push_back(v[piv]);
    return c;
}

Subspace Subspace::sum(const Subspace& o) const {
    check(o);
    if (o.basis_.empty()) return *this;
    if (basis_.empty()) return o;
    std::vector<Vec> all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(*field_, n_, all);
}

Subspace Subspace::with(const Vec& v) const {
    if (contains(v)) return *this;
    std::vector<Vec> all = basis_;
    all.push_back(v);
    return span(*field_, n_, all);
}

Subspace Subspace::annihilator() const {
    if (basis_.empty()) return whole(*field_, n_);
    return span(*field_, n_, nullspace(Matrix::from_rows(*field_, n_, basis_)));
}

Subspace Subspace::intersect(const Subspace& o) const {
    check(o);
    if (basis_.empty() || o.is_whole()) return *this;
    if (o.basis_.empty() || is_whole()) return o;
    return annihilator().sum(o.annihilator()).annihilator();
}

bool Subspace::operator==(const Subspace& o) const {
    return field_ == o.field_ && n_ == o.n_ && basis_ == o.basis_;
}

std::string Subspace::to_string(const std::vector<std::string>& labels) const {
    std::string s = "<";
    for (std::size_t i = 0; i < basis_.size(); ++i) s += (i ? ", " : "") + format_combination(basis_[i], labels);
    return s + ">";
}

QuotientData quotient(const Subspace& u) {
    const Field& f = u.field();
    const std::size_t n = u.ambient();
    std::vector<bool> is_pivot(n, false);
    for (auto c : u.pivots()) is_pivot[c] = true;
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) comp.push_back(i);
    Matrix proj(f, comp.size(), n), sect(f, n, comp.size());
    for (std::size_t j = 0; j < n; ++j) {
        const Vec r = u.reduce(unit_vec(f, n, j));
        for (std::size_t k = 0; k < comp.size(); ++k) proj.at(k, j) = r[comp[k]];
    }
    for (std::size_t k = 0; k < comp.size(); ++k) sect.at(comp[k], k) = f.one();
    return {std::move(comp), std::move(proj), std::move(sect)};
}

}  // namespace radu
