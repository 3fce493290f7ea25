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

#ifndef RADU_HOPF_TEXT_HPP
#define RADU_HOPF_TEXT_HPP

#include <string>

#include "radu/hopf/algebra.hpp"

namespace radu {

/// Parses a sum of products such as `x*g + x`, `t*x^2 - 1`, `(t+1)*one`.
/// Factors are basis labels (optionally `label^k`) or scalar literals; a bare
/// scalar stands for that multiple of the unit. Throws ParseError.
Vec parse_element(const AssociativeAlgebra& a, const std::string& text);

/// Parses an element of A (x) A such as `x@one + one@x` or `t*g@g`.
Vec parse_tensor(const AssociativeAlgebra& a, const std::string& text);

}  // namespace radu

#endif
