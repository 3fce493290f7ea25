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

#include "radu/gallery/catalog.hpp"

#include <regex>

#include "radu/errors.hpp"

#include "radu/gallery/hopf.hpp"
#include "radu/hopf/enveloping.hpp"

namespace radu::gallery {

namespace {

std::uint32_t parse_prime(const std::string& s) {
    const unsigned long v = std::stoul(s);
    if (v > 1000 || !modp::is_prime(static_cast<std::uint32_t>(v)))
        throw std::invalid_argument("'" + s + "' is not a supported prime");
    return static_cast<std::uint32_t>(v);
}

}  // namespace

std::optional<std::vector<std::string>> call_arguments(const std::string& name, const std::string& head) {
    if (name.size() < head.size() + 2 || name.compare(0, head.size() + 1, head + "(") != 0 || name.back() != ')')
        return std::nullopt;
    std::vector<std::string> out{""};
    int depth = 0;
    for (std::size_t i = head.size() + 1; i + 1 < name.size(); ++i) {
        const char c = name[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) out.emplace_back();
        else if (c != ' ') out.back() += c;
    }
    return out;
}

std::optional<AlgebraWithRep> lie_by_name(const std::string& name) {
    std::smatch m;
    if (std::regex_match(name, m, std::regex(R"(G-imperfect@p=(\d+))"))) return imperfect_G(parse_prime(m[1]));
    if (name == "sl2-kernel@p=2") return AlgebraWithRep{sl2_kernel_char2(), {}};
    if (std::regex_match(name, m, std::regex(R"(alpha@(\d+))")))
        return AlgebraWithRep{alpha_lie(Field::prime(parse_prime(m[1]))), {}};
    if (std::regex_match(name, m, std::regex(R"(mu@(\d+))")))
        return AlgebraWithRep{mu_lie(Field::prime(parse_prime(m[1]))), {}};
    if (std::regex_match(name, m, std::regex(R"(torus@(\d+)\^(\d+))"))) {
        const unsigned long n = std::stoul(m[2]);
        if (n == 0 || n > 16) throw std::invalid_argument("torus rank must be between 1 and 16");
        return AlgebraWithRep{torus_lie(Field::prime(parse_prime(m[1])), n), {}};
    }
    if (const auto args = call_arguments(name, "product")) {
        if (args->size() < 2) throw std::invalid_argument("product needs at least two factors");
        std::optional<RestrictedLieAlgebra> acc;
        for (const auto& a : *args) {
            const auto factor = lie_by_name(a);
            if (!factor) throw std::invalid_argument("unknown factor '" + a + "'");
            acc = acc ? direct_sum(*acc, factor->algebra) : factor->algebra;
        }
        return AlgebraWithRep{*acc, {}};
    }
    return std::nullopt;
}

std::optional<HopfAlgebra> hopf_by_name(const std::string& name, std::size_t cap) {
    std::smatch m;
    if (name == "alpha2") return alpha_hopf(Field::prime(2), 1);
    if (name == "alpha4") return alpha_hopf(Field::prime(2), 2);
    if (name == "mu2") return mu_hopf(Field::prime(2));
    if (std::regex_match(name, m, std::regex(R"(alpha@(\d+)(\^(\d+))?)"))) {
        const unsigned r = m[3].matched ? static_cast<unsigned>(std::stoul(m[3])) : 1u;
        const std::uint32_t p = parse_prime(m[1]);
        std::size_t d = 1;
        for (unsigned i = 0; i < r; ++i)
            if ((d *= p) > cap) throw CapExceeded("alpha@" + std::to_string(p) + "^" + std::to_string(r) + " exceeds the cap");
        return alpha_hopf(Field::prime(p), r);
    }
    if (std::regex_match(name, m, std::regex(R"(mu@(\d+))"))) return mu_hopf(Field::prime(parse_prime(m[1])));
    if (const auto args = call_arguments(name, "product")) {
        if (args->size() < 2) throw std::invalid_argument("product needs at least two factors");
        std::optional<HopfAlgebra> acc;
        for (const auto& a : *args) {
            const auto factor = hopf_by_name(a, cap);
            if (!factor) throw std::invalid_argument("unknown factor '" + a + "'");
            if (acc && acc->dim() * factor->dim() > cap) throw CapExceeded("product exceeds the cap");
            acc = acc ? tensor_product(*acc, *factor) : *factor;
        }
        return acc;
    }
    if (const auto args = call_arguments(name, "dual-u")) {
        if (args->size() != 1) throw std::invalid_argument("dual-u takes one Lie algebra");
        const auto g = lie_by_name(args->front());
        if (!g) throw std::invalid_argument("unknown Lie algebra '" + args->front() + "'");
        return dual(restricted_enveloping_algebra(g->algebra, cap).hopf);
    }
    return std::nullopt;
}

}  // namespace radu::gallery
