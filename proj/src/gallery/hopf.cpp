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

#include "radu/gallery/hopf.hpp"

#include "radu/errors.hpp"

namespace radu::gallery {

namespace {

std::string power_label(const std::string& base, std::size_t k) {
    if (k == 0) return "one";
    return k == 1 ? base : base + std::to_string(k);
}

// Basis x^0..x^{n-1} with x^n = lead * one (lead = 0 truncates, 1 makes g^n = 1).
AlgebraData cyclic_algebra(const Field& f, std::size_t n, const std::string& var, bool wrap) {
    AlgebraData a{&f, {}, {}, unit_vec(f, n, 0)};
    for (std::size_t k = 0; k < n; ++k) a.labels.push_back(power_label(var, k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i + j < n) a.mult.push_back(unit_vec(f, n, i + j));
            else if (wrap) a.mult.push_back(unit_vec(f, n, i + j - n));
            else a.mult.push_back(zero_vec(f, n));
        }
    return a;
}

}  // namespace

HopfAlgebra alpha_hopf(const Field& f, unsigned r) {
    const std::uint32_t p = f.characteristic();
    std::size_t n = 1;
    for (unsigned i = 0; i < r; ++i) n *= p;
    HopfData h{cyclic_algebra(f, n, "x", false), {}, unit_vec(f, n, 0), Matrix(f, n, n)};
    // binomial coefficients mod p by Pascal's rule
    std::vector<std::vector<std::uint32_t>> c(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t m = 0; m < n; ++m) {
        c[m][0] = 1;
        for (std::size_t k = 1; k <= m; ++k) c[m][k] = modp::add(c[m - 1][k - 1], k < m ? c[m - 1][k] : 0, p);
    }
    for (std::size_t m = 0; m < n; ++m) {
        Vec d = zero_vec(f, n * n);
        for (std::size_t k = 0; k <= m; ++k)
            if (c[m][k]) d[k * n + (m - k)] = f.from_int(c[m][k]);
        h.comult.push_back(std::move(d));
        h.antipode.at(m, m) = m % 2 ? -f.one() : f.one();
    }
    return HopfAlgebra(std::move(h));
}

HopfAlgebra mu_hopf(const Field& f, std::uint32_t n) {
    if (n == 0) n = f.characteristic();
    HopfData h{cyclic_algebra(f, n, "g", true), {}, zero_vec(f, n), Matrix(f, n, n)};
    for (std::size_t m = 0; m < n; ++m) {
        Vec d = zero_vec(f, n * n);
        d[m * n + m] = f.one();
        h.comult.push_back(std::move(d));
        h.counit[m] = f.one();
        h.antipode.at((n - m) % n, m) = f.one();
    }
    return HopfAlgebra(std::move(h));
}

AssociativeAlgebra truncated_polynomial(const Field& f, std::size_t n, const std::string& var) {
    if (n == 0) throw std::invalid_argument("truncation degree must be positive");
    return AssociativeAlgebra(cyclic_algebra(f, n, var, false));
}

AssociativeAlgebra square_zero(const Field& f, const std::vector<std::string>& vars) {
    const std::size_t n = vars.size() + 1;
    AlgebraData a{&f, {"one"}, {}, unit_vec(f, n, 0)};
    a.labels.insert(a.labels.end(), vars.begin(), vars.end());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == 0) a.mult.push_back(unit_vec(f, n, j));
            else if (j == 0) a.mult.push_back(unit_vec(f, n, i));
            else a.mult.push_back(zero_vec(f, n));
        }
    return AssociativeAlgebra(std::move(a));
}

}  // namespace radu::gallery
