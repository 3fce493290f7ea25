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

#ifndef RADU_CLI_DOCUMENT_HPP
#define RADU_CLI_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "radu/hopf/algebra.hpp"
#include "radu/lie/algebra.hpp"

namespace radu::cli {

/**
 * Line-oriented algebra text. `#` starts a comment; section keywords stand
 * alone on a line:
 *
 *     FIELD
 *     GF(2)(t)
 *     BASIS
 *     X Y Z
 *     BRACKETS
 *     [Z,Y] = Y
 *     PPOWERS
 *     Y = t*X
 *     REP
 *     Y = [[0,t],[1,0]]
 *
 * Unlisted brackets and p-powers are zero. Structure constants are not
 * validated here; a document with `[X,X] = Y` parses and fails validation.
 */
struct AlgebraDocument {
    StructureConstants constants;
    std::vector<Matrix> representation;  // empty, or one matrix per basis element
};

/// `field_override` replaces the FIELD section (scalars are read in the override).
AlgebraDocument parse_algebra(const std::string& text, const Field* field_override = nullptr);
/// Canonical text: brackets [e_i,e_j] with i < j, nonzero entries only.
std::string print_algebra(const AlgebraDocument& doc);

/**
 * Hopf algebra text with sections FIELD, BASIS, UNIT, MULT (`x*x = 0`),
 * COMULT (`x = x@one + one@x`), COUNIT (`x = 0`), ANTIPODE (`x = x`).
 * Unlisted products are zero except that a unit given as a basis label acts
 * as the identity; the unit label defaults to counit 1, antipode itself and
 * comultiplication unit@unit. Other unlisted entries are zero.
 */
HopfData parse_hopf(const std::string& text, const Field* field_override = nullptr);
std::string print_hopf(const HopfData& h);

}  // namespace radu::cli

#endif
