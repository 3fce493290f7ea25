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

#include "radu/embedding.hpp"

#include "radu/errors.hpp"

namespace radu {

namespace {

void same_characteristic(const Field& s, const Field& t) {
    if (s.characteristic() != t.characteristic())
        throw FieldMismatch("no embedding from characteristic " + std::to_string(s.characteristic()) +
                            " into characteristic " + std::to_string(t.characteristic()));
    if (!t.is_field()) throw UnsupportedKind("embedding target " + t.name() + " is not a field");
}

Scalar eval_poly(const FpPoly& f, const Scalar& x) {
    Scalar r = x.field().zero();
    const auto& c = f.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + x.field().from_int(c[i]);
    return r;
}

}  // namespace

FieldEmbedding FieldEmbedding::identity(const Field& f) {
    if (!f.is_field()) throw UnsupportedKind(f.name() + " is not a field");
    if (f.kind() == FieldKind::prime) return FieldEmbedding(f, f, std::nullopt);
    return FieldEmbedding(f, f, f.variable());
}

FieldEmbedding FieldEmbedding::inclusion(const Field& source, const Field& target) {
    same_characteristic(source, target);
    if (&source == &target) return identity(source);
    if (source.kind() == FieldKind::prime) return FieldEmbedding(source, target, std::nullopt);
    if (source.kind() != FieldKind::galois || target.kind() != FieldKind::galois ||
        target.extension_degree() % source.extension_degree() != 0)
        throw FieldMismatch("no canonical inclusion of " + source.name() + " into " + target.name());
    // Image of u: the first root of the source modulus in enumeration order.
    for (std::uint64_t i = 0; i < target.order(); ++i) {
        const Scalar x = target.element(i);
        if (eval_poly(source.modulus(), x).is_zero()) return FieldEmbedding(source, target, x);
    }
    throw std::logic_error("modulus has no root in " + target.name());
}

FieldEmbedding FieldEmbedding::inseparable(const Field& source, const Field& target, unsigned m) {
    same_characteristic(source, target);
    if (source.kind() != FieldKind::rational_function || target.kind() != FieldKind::rational_function)
        throw UnsupportedKind("t -> s^(p^m) needs rational function fields");
    std::uint64_t e = 1;
    for (unsigned i = 0; i < m; ++i) e *= source.characteristic();
    return FieldEmbedding(source, target, target.variable().pow(e));
}

Scalar FieldEmbedding::operator()(const Scalar& x) const {
    if (&x.field() != source_) {
        if (!source_->can_lift_from(x.field()))
            throw FieldMismatch("element of " + x.field().name() + " given to an embedding of " + source_->name());
        return (*this)(source_->lift(x));
    }
    switch (source_->kind()) {
        case FieldKind::prime:
            return target_->from_int(x.residue());
        case FieldKind::galois:
            return eval_poly(x.galois_poly(), *generator_image_);
        case FieldKind::rational_function:
            return eval_poly(x.numerator(), *generator_image_) / eval_poly(x.denominator(), *generator_image_);
        case FieldKind::coordinate_ring:
            break;
    }
    throw UnsupportedKind("embedding of a coordinate ring");
}

Vec FieldEmbedding::operator()(const Vec& v) const {
    Vec r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back((*this)(x));
    return r;
}

Matrix FieldEmbedding::operator()(const Matrix& m) const {
    Matrix r(*target_, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = (*this)(m.at(i, j));
    return r;
}

FieldEmbedding FieldEmbedding::then(const FieldEmbedding& next) const {
    if (&next.source() != target_)
        throw FieldMismatch("cannot compose: " + target_->name() + " vs " + next.source().name());
    if (!generator_image_) return FieldEmbedding(*source_, next.target(), std::nullopt);
    return FieldEmbedding(*source_, next.target(), next(*generator_image_));
}

std::string FieldEmbedding::describe() const {
    std::string s = source_->name() + " -> " + target_->name();
    if (generator_image_) s += ", " + source_->variables()[0] + " -> " + generator_image_->to_string();
    return s;
}

}  // namespace radu
