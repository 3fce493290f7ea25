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

#ifndef RADU_HOPF_ALGEBRA_HPP
#define RADU_HOPF_ALGEBRA_HPP

#include <string>
#include <vector>

#include "radu/lie/algebra.hpp"

namespace radu {

/// Finite-dimensional unital associative algebra by structure constants.
struct AlgebraData {
    const Field* field = nullptr;
    std::vector<std::string> labels;
    std::vector<Vec> mult;  // d*d entries, mult[i*d+j] = e_i e_j
    Vec unit;

    std::size_t dim() const noexcept { return labels.size(); }
};

ValidationReport validate_algebra(const AlgebraData& a);

class AssociativeAlgebra {
   public:
    /// Validates associativity and the unit laws; throws InvalidAlgebra.
    explicit AssociativeAlgebra(AlgebraData a);
    static AssociativeAlgebra trusted(AlgebraData a);

    const Field& field() const noexcept { return *a_.field; }
    std::size_t dim() const noexcept { return a_.dim(); }
    const std::vector<std::string>& labels() const noexcept { return a_.labels; }
    const AlgebraData& data() const noexcept { return a_; }
    const Vec& unit() const noexcept { return a_.unit; }
    const Vec& basis_product(std::size_t i, std::size_t j) const { return a_.mult[i * dim() + j]; }

    Vec multiply(const Vec& x, const Vec& y) const;
    Vec power(const Vec& x, std::uint64_t e) const;
    bool is_commutative() const;

    /// Two-sided ideal generated by the given elements.
    Subspace ideal_generated(const std::vector<Vec>& gens) const;
    bool is_ideal(const Subspace& s) const;

    /// Product in A (x) A on coordinates a*d+b.
    Vec tensor_multiply(const Vec& x, const Vec& y) const;

    std::string format(const Vec& v) const { return format_combination(v, a_.labels); }
    std::string format(const Subspace& s) const { return s.to_string(a_.labels); }

   private:
    struct Trusted {};
    AssociativeAlgebra(AlgebraData a, Trusted) : a_(std::move(a)) {}

    AlgebraData a_;
};

struct HopfData {
    AlgebraData algebra;
    std::vector<Vec> comult;  // Delta(e_i) on coordinates a*d+b of e_a (x) e_b
    Vec counit;               // epsilon(e_i)
    Matrix antipode;          // column i is S(e_i)
};

/// Checks every Hopf axiom on basis elements; reports the first failure.
ValidationReport validate_hopf(const HopfData& h);

class HopfAlgebra {
   public:
    /// Validates; throws InvalidAlgebra.
    explicit HopfAlgebra(HopfData h);
    static HopfAlgebra trusted(HopfData h);

    const AssociativeAlgebra& algebra() const noexcept { return alg_; }
    const HopfData& data() const noexcept { return h_; }
    const Field& field() const noexcept { return alg_.field(); }
    std::size_t dim() const noexcept { return alg_.dim(); }
    const std::vector<std::string>& labels() const noexcept { return alg_.labels(); }

    Vec multiply(const Vec& x, const Vec& y) const { return alg_.multiply(x, y); }
    Vec comultiply(const Vec& x) const;
    Scalar counit(const Vec& x) const;
    Vec antipode(const Vec& x) const { return h_.antipode.apply(x); }

    bool is_commutative() const { return alg_.is_commutative(); }
    bool is_cocommutative() const;
    /// Basis of ker(epsilon): e_i - epsilon(e_i) 1.
    std::vector<Vec> augmentation_basis() const;
    Subspace augmentation_ideal() const;

    std::string format(const Vec& v) const { return alg_.format(v); }
    std::string format(const Subspace& s) const { return alg_.format(s); }
    /// Element of A (x) A as `a@b + ...`.
    std::string format_tensor(const Vec& t) const;

   private:
    struct Trusted {};
    HopfAlgebra(HopfData h, Trusted);

    HopfData h_;
    AssociativeAlgebra alg_;
};

/// Linear dual: all structure maps transposed. Labels get the prefix `d_`.
HopfAlgebra dual(const HopfAlgebra& h, const std::string& prefix = "d_");
HopfAlgebra tensor_product(const HopfAlgebra& a, const HopfAlgebra& b);

/// Coordinates in V (x) W (dims m, n) for v (x) w.
Vec tensor(const Vec& v, const Vec& w);
std::string format_tensor(const Vec& t, const std::vector<std::string>& left, const std::vector<std::string>& right);

}  // namespace radu

#endif
