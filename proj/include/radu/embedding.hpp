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

#ifndef RADU_EMBEDDING_HPP
#define RADU_EMBEDDING_HPP

#include <optional>
#include <string>

#include "radu/field.hpp"
#include "radu/linalg.hpp"

namespace radu {

/**
 * Injective ring homomorphism between scalar fields of one characteristic,
 * determined by the image of the source generator. Supported shapes:
 * identity, F_p into any field, F_{p^a} into F_{p^b} with a | b, and the
 * purely inseparable t -> s^(p^m) between rational function fields.
 */
class FieldEmbedding {
   public:
    static FieldEmbedding identity(const Field& f);
    /// Canonical inclusion of finite fields; F_p into anything of characteristic p.
    static FieldEmbedding inclusion(const Field& source, const Field& target);
    /// t -> s^(p^m) from F_p(t) into F_p(s); m = 0 with equal variables is the identity.
    static FieldEmbedding inseparable(const Field& source, const Field& target, unsigned m);

    const Field& source() const noexcept { return *source_; }
    const Field& target() const noexcept { return *target_; }

    Scalar operator()(const Scalar& x) const;
    Vec operator()(const Vec& v) const;
    Matrix operator()(const Matrix& m) const;

    /// x -> next(this(x)).
    FieldEmbedding then(const FieldEmbedding& next) const;

    std::string describe() const;

   private:
    FieldEmbedding(const Field& s, const Field& t, std::optional<Scalar> g)
        : source_(&s), target_(&t), generator_image_(std::move(g)) {}

    const Field* source_;
    const Field* target_;
    std::optional<Scalar> generator_image_;  // absent for prime sources
};

}  // namespace radu

#endif
