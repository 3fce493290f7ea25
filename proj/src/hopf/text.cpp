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

#include "radu/hopf/text.hpp"

#include <algorithm>
#include <cctype>

#include "radu/errors.hpp"

namespace radu {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Splits at separator characters outside parentheses, keeping each separator with the piece after it.
std::vector<std::string> split_top(const std::string& s, const std::string& seps, bool keep_sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw ParseError("unbalanced parenthesis in '" + s + "'");
        if (depth == 0 && seps.find(c) != std::string::npos) {
            out.push_back(cur);
            cur = keep_sep ? std::string(1, c) : std::string();
            continue;
        }
        cur += c;
    }
    if (depth != 0) throw ParseError("unbalanced parenthesis in '" + s + "'");
    out.push_back(cur);
    return out;
}

std::optional<std::size_t> label_index(const AssociativeAlgebra& a, const std::string& s) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.labels()[i] == s) return i;
    return std::nullopt;
}

// Product of factors; scalars fold into the coefficient.
Vec parse_product(const AssociativeAlgebra& a, const std::string& text) {
    const Field& f = a.field();
    Scalar coeff = f.one();
    Vec value = a.unit();
    const std::string body = trim(text);
    if (body.empty()) throw ParseError("empty term");
    for (const auto& raw : split_top(body, "*", false)) {
        const std::string factor = trim(raw);
        if (factor.empty()) throw ParseError("empty factor in '" + body + "'");
        std::string base = factor;
        std::uint64_t exponent = 1;
        if (const auto caret = factor.rfind('^'); caret != std::string::npos && factor.back() != ')') {
            const std::string e = trim(factor.substr(caret + 1));
            if (!e.empty() && std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
                label_index(a, trim(factor.substr(0, caret)))) {
                base = trim(factor.substr(0, caret));
                exponent = std::stoull(e);
            }
        }
        if (const auto idx = label_index(a, base)) {
            value = a.multiply(value, a.power(unit_vec(f, a.dim(), *idx), exponent));
            continue;
        }
        try {
            coeff *= parse_scalar(f, factor);
        } catch (const ParseError&) {
            throw ParseError("unknown basis name or scalar '" + factor + "'");
        }
    }
    return scale(coeff, value);
}

template <class Term>
Vec parse_sum(const std::string& text, std::size_t size, const Field& f, Term term) {
    Vec r = zero_vec(f, size);
    const std::string body = trim(text);
    if (body.empty()) throw ParseError("empty expression");
    const auto pieces = split_top(body, "+-", true);
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        std::string piece = trim(pieces[k]);
        if (k == 0 && piece.empty()) continue;  // leading sign
        bool negative = false;
        if (!piece.empty() && (piece[0] == '+' || piece[0] == '-')) {
            negative = piece[0] == '-';
            piece = trim(piece.substr(1));
        }
        if (piece.empty()) throw ParseError("dangling sign in '" + body + "'");
        const Vec t = term(piece);
        r = negative ? sub(r, t) : add(r, t);
    }
    return r;
}

}  // namespace

Vec parse_element(const AssociativeAlgebra& a, const std::string& text) {
    return parse_sum(text, a.dim(), a.field(), [&](const std::string& t) {
        if (t.find('@') != std::string::npos) throw ParseError("unexpected tensor sign in '" + t + "'");
        return parse_product(a, t);
    });
}

Vec parse_tensor(const AssociativeAlgebra& a, const std::string& text) {
    return parse_sum(text, a.dim() * a.dim(), a.field(), [&](const std::string& t) {
        const auto legs = split_top(t, "@", false);
        if (legs.size() != 2) throw ParseError("tensor term '" + t + "' needs exactly one '@'");
        return tensor(parse_product(a, legs[0]), parse_product(a, legs[1]));
    });
}

}  // namespace radu
