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

#include "radu/cli/document.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "radu/errors.hpp"

namespace radu::cli {

namespace {

struct Line {
    std::size_t number;
    std::size_t indent;  // 0-based column of the first non-space character
    std::string text;
};

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

using Sections = std::map<std::string, std::vector<Line>>;

Sections split_sections(const std::string& text, const std::set<std::string>& allowed) {
    Sections out;
    std::istringstream in(text);
    std::string raw, current;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string t = trim(raw);
        if (t.empty()) continue;
        const std::size_t indent = raw.find_first_not_of(" \t");
        static const std::set<std::string> known{"FIELD", "BASIS", "BRACKETS", "PPOWERS", "REP",
                                                 "UNIT", "MULT", "COMULT", "COUNIT", "ANTIPODE"};
        if (known.count(t)) {
            if (!allowed.count(t)) throw ParseError("section '" + t + "' does not belong in this format", number, indent + 1);
            if (out.count(t)) throw ParseError("section '" + t + "' appears twice", number, indent + 1);
            current = t;
            out[current];
            continue;
        }
        if (current.empty()) throw ParseError("content before the first section", number, indent + 1);
        out[current].push_back({number, indent, t});
    }
    return out;
}

const Field& read_field(const Sections& s, const Field* override_field) {
    const auto it = s.find("FIELD");
    if (it == s.end() || it->second.size() != 1) {
        if (override_field) return *override_field;
        throw ParseError("FIELD section must hold exactly one line");
    }
    const Line& l = it->second.front();
    const Field* f = nullptr;
    try {
        f = &parse_field(l.text);
    } catch (const ParseError& e) {
        throw ParseError(e.message(), l.number, l.indent + (e.column() ? e.column() : 1));
    }
    if (override_field) {
        if (override_field->characteristic() != f->characteristic())
            throw ParseError("--field changes the characteristic", l.number, l.indent + 1);
        return *override_field;
    }
    return *f;
}

std::vector<std::string> read_basis(const Sections& s) {
    const auto it = s.find("BASIS");
    if (it == s.end()) throw ParseError("missing BASIS section");
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (const auto& l : it->second) {
        std::istringstream in(l.text);
        std::string name;
        while (in >> name) {
            const bool ident = (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                               std::all_of(name.begin(), name.end(), [](char c) {
                                   return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
                               });
            const std::size_t col = l.indent + 1 + l.text.find(name);
            if (!ident) throw ParseError("basis name '" + name + "' is not an identifier", l.number, col);
            if (!seen.insert(name).second) throw ParseError("duplicate basis name '" + name + "'", l.number, col);
            labels.push_back(name);
        }
    }
    if (labels.empty()) throw ParseError("empty BASIS section");
    return labels;
}

std::size_t label_index(const std::vector<std::string>& labels, const std::string& name, const Line& l) {
    const auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end())
        throw ParseError("unknown basis name '" + name + "'", l.number, l.indent + 1 + l.text.find(name));
    return static_cast<std::size_t>(it - labels.begin());
}

std::pair<std::string, std::string> split_equation(const Line& l) {
    const auto eq = l.text.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'lhs = rhs'", l.number, l.indent + 1);
    return {trim(l.text.substr(0, eq)), trim(l.text.substr(eq + 1))};
}

template <class F>
auto at_line(const Line& l, F fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ParseError& e) {
        if (e.line() > 1) throw;
        throw ParseError(e.message(), l.number, l.indent + (e.column() ? e.column() : 1));
    }
}

Matrix parse_matrix(const Field& f, const std::string& text, std::size_t n) {
    std::vector<std::vector<std::string>> rows;
    int depth = 0;
    std::string cell;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '[') {
            if (++depth == 2) rows.emplace_back();
            if (depth > 2) throw ParseError("matrix nested too deeply");
            continue;
        }
        if (c == ']') {
            if (depth == 2) {
                rows.back().push_back(cell);
                cell.clear();
            }
            if (--depth < 0) throw ParseError("unbalanced ']' in matrix");
            continue;
        }
        if (c == ',' && depth == 2) {
            rows.back().push_back(cell);
            cell.clear();
            continue;
        }
        if (c == ',' && depth == 1) continue;
        if (depth != 2) throw ParseError("unexpected '" + std::string(1, c) + "' in matrix");
        cell += c;
    }
    if (depth != 0) throw ParseError("unbalanced '[' in matrix");
    if (rows.empty()) throw ParseError("empty matrix");
    const std::size_t d = rows.size();
    if (n && d != n) throw ParseError("matrices must all have size " + std::to_string(n));
    Matrix m(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (rows[i].size() != d) throw ParseError("matrix must be square");
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = parse_scalar(f, rows[i][j]);
    }
    return m;
}

// c*a@b sums with linear legs
Vec parse_tensor_linear(const Field& f, const std::vector<std::string>& labels, const std::string& text) {
    const std::size_t d = labels.size();
    Vec r = zero_vec(f, d * d);
    std::vector<std::string> pieces{""};
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-')) pieces.emplace_back(1, c);
        else pieces.back() += c;
    }
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        std::string piece = trim(pieces[k]);
        if (k == 0 && piece.empty()) continue;
        bool negative = false;
        if (!piece.empty() && (piece[0] == '+' || piece[0] == '-')) {
            negative = piece[0] == '-';
            piece = trim(piece.substr(1));
        }
        if (piece == "0") continue;
        const auto at = piece.find('@');
        if (at == std::string::npos || piece.find('@', at + 1) != std::string::npos)
            throw ParseError("tensor term '" + piece + "' needs exactly one '@'");
        const Vec left = parse_combination(f, labels, piece.substr(0, at));
        const Vec right = parse_combination(f, labels, piece.substr(at + 1));
        const Vec t = tensor(left, right);
        r = negative ? sub(r, t) : add(r, t);
    }
    return r;
}

std::string tensor_text(const Vec& t, const std::vector<std::string>& labels) {
    return format_tensor(t, labels, labels);
}

}  // namespace

AlgebraDocument parse_algebra(const std::string& text, const Field* field_override) {
    const Sections s = split_sections(text, {"FIELD", "BASIS", "BRACKETS", "PPOWERS", "REP"});
    const Field& f = read_field(s, field_override);
    if (!f.is_field()) throw ParseError("structure constants need a field, not " + f.name());
    const auto labels = read_basis(s);
    const std::size_t n = labels.size();
    AlgebraDocument doc{StructureConstants::zero(f, labels), {}};
    std::set<std::pair<std::size_t, std::size_t>> given;
    if (const auto it = s.find("BRACKETS"); it != s.end())
        for (const auto& l : it->second) {
            const auto [lhs, rhs] = split_equation(l);
            if (lhs.size() < 5 || lhs.front() != '[' || lhs.back() != ']' || lhs.find(',') == std::string::npos)
                throw ParseError("expected '[a,b] = ...'", l.number, l.indent + 1);
            const auto comma = lhs.find(',');
            const std::size_t i = label_index(labels, trim(lhs.substr(1, comma - 1)), l);
            const std::size_t j = label_index(labels, trim(lhs.substr(comma + 1, lhs.size() - comma - 2)), l);
            const Vec v = at_line(l, [&] { return parse_combination(f, labels, rhs); });
            if (!given.insert({std::min(i, j), std::max(i, j)}).second)
                throw ParseError("bracket given twice", l.number, l.indent + 1);
            if (i == j) doc.constants.brackets[i * n + i] = v;  // left for validation to reject
            else doc.constants.set_bracket(i, j, v);
        }
    if (const auto it = s.find("PPOWERS"); it != s.end())
        for (const auto& l : it->second) {
            const auto [lhs, rhs] = split_equation(l);
            const std::size_t i = label_index(labels, lhs, l);
            doc.constants.ppowers[i] = at_line(l, [&] { return parse_combination(f, labels, rhs); });
        }
    if (const auto it = s.find("REP"); it != s.end()) {
        std::vector<std::optional<Matrix>> rep(n);
        std::size_t size = 0;
        for (const auto& l : it->second) {
            const auto [lhs, rhs] = split_equation(l);
            const std::size_t i = label_index(labels, lhs, l);
            rep[i] = at_line(l, [&] { return parse_matrix(f, rhs, size); });
            size = rep[i]->rows();
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!rep[i]) throw ParseError("REP section lacks a matrix for " + labels[i]);
            doc.representation.push_back(*rep[i]);
        }
    }
    return doc;
}

std::string print_algebra(const AlgebraDocument& doc) {
    const auto& sc = doc.constants;
    const std::size_t n = sc.dim();
    std::ostringstream o;
    o << "FIELD\n" << sc.field->name() << "\nBASIS\n";
    for (std::size_t i = 0; i < n; ++i) o << (i ? " " : "") << sc.labels[i];
    o << "\nBRACKETS\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!is_zero(sc.brackets[i * n + j]))
                o << "[" << sc.labels[i] << "," << sc.labels[j] << "] = " << format_combination(sc.brackets[i * n + j], sc.labels) << "\n";
    o << "PPOWERS\n";
    for (std::size_t i = 0; i < n; ++i)
        if (!is_zero(sc.ppowers[i])) o << sc.labels[i] << " = " << format_combination(sc.ppowers[i], sc.labels) << "\n";
    if (!doc.representation.empty()) {
        o << "REP\n";
        for (std::size_t i = 0; i < n; ++i) o << sc.labels[i] << " = " << doc.representation[i].to_string() << "\n";
    }
    return o.str();
}

HopfData parse_hopf(const std::string& text, const Field* field_override) {
    const Sections s = split_sections(text, {"FIELD", "BASIS", "UNIT", "MULT", "COMULT", "COUNIT", "ANTIPODE"});
    const Field& f = read_field(s, field_override);
    if (!f.is_field()) throw ParseError("structure constants need a field, not " + f.name());
    const auto labels = read_basis(s);
    const std::size_t d = labels.size();
    HopfData h{AlgebraData{&f, labels, std::vector<Vec>(d * d, zero_vec(f, d)), zero_vec(f, d)},
               std::vector<Vec>(d, zero_vec(f, d * d)),
               zero_vec(f, d),
               Matrix(f, d, d)};
    const auto unit_it = s.find("UNIT");
    if (unit_it == s.end() || unit_it->second.size() != 1) throw ParseError("UNIT section must hold exactly one line");
    const Line& ul = unit_it->second.front();
    h.algebra.unit = at_line(ul, [&] { return parse_combination(f, labels, ul.text); });
    std::optional<std::size_t> unit_label;
    for (std::size_t i = 0; i < d; ++i)
        if (h.algebra.unit == unit_vec(f, d, i)) unit_label = i;
    if (unit_label) {
        const std::size_t u = *unit_label;
        for (std::size_t i = 0; i < d; ++i) {
            h.algebra.mult[u * d + i] = unit_vec(f, d, i);
            h.algebra.mult[i * d + u] = unit_vec(f, d, i);
        }
        h.comult[u] = tensor(unit_vec(f, d, u), unit_vec(f, d, u));
        h.counit[u] = f.one();
        h.antipode.at(u, u) = f.one();
    }
    if (const auto it = s.find("MULT"); it != s.end())
        for (const auto& l : it->second) {
            const auto [lhs, rhs] = split_equation(l);
            const auto star = lhs.find('*');
            if (star == std::string::npos) throw ParseError("expected 'a*b = ...'", l.number, l.indent + 1);
            const std::size_t i = label_index(labels, trim(lhs.substr(0, star)), l);
            const std::size_t j = label_index(labels, trim(lhs.substr(star + 1)), l);
            h.algebra.mult[i * d + j] = at_line(l, [&] { return parse_combination(f, labels, rhs); });
        }
    if (const auto it = s.find("COMULT"); it != s.end())
        for (const auto& l : it->second) {
            const auto [lhs, rhs] = split_equation(l);
            h.comult[label_index(labels, lhs, l)] = at_line(l, [&] { return parse_tensor_linear(f, labels, rhs); });
        }
    if (const auto it = s.find("COUNIT"); it != s.end())
        for (const auto& l : it->second) {
            const auto [lhs, rhs] = split_equation(l);
            h.counit[label_index(labels, lhs, l)] = at_line(l, [&] { return parse_scalar(f, rhs); });
        }
    if (const auto it = s.find("ANTIPODE"); it != s.end())
        for (const auto& l : it->second) {
            const auto [lhs, rhs] = split_equation(l);
            const std::size_t i = label_index(labels, lhs, l);
            const Vec v = at_line(l, [&] { return parse_combination(f, labels, rhs); });
            for (std::size_t k = 0; k < d; ++k) h.antipode.at(k, i) = v[k];
        }
    return h;
}

std::string print_hopf(const HopfData& h) {
    const auto& a = h.algebra;
    const std::size_t d = a.dim();
    std::ostringstream o;
    o << "FIELD\n" << a.field->name() << "\nBASIS\n";
    for (std::size_t i = 0; i < d; ++i) o << (i ? " " : "") << a.labels[i];
    o << "\nUNIT\n" << format_combination(a.unit, a.labels) << "\nMULT\n";
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            o << a.labels[i] << "*" << a.labels[j] << " = " << format_combination(a.mult[i * d + j], a.labels) << "\n";
    o << "COMULT\n";
    for (std::size_t i = 0; i < d; ++i) o << a.labels[i] << " = " << tensor_text(h.comult[i], a.labels) << "\n";
    o << "COUNIT\n";
    for (std::size_t i = 0; i < d; ++i) o << a.labels[i] << " = " << h.counit[i].to_string() << "\n";
    o << "ANTIPODE\n";
    for (std::size_t i = 0; i < d; ++i) o << a.labels[i] << " = " << format_combination(h.antipode.column(i), a.labels) << "\n";
    return o.str();
}

}  // namespace radu::cli
