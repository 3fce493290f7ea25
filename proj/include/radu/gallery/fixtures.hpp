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

#ifndef RADU_GALLERY_FIXTURES_HPP
#define RADU_GALLERY_FIXTURES_HPP

#include <string>
#include <vector>

namespace radu::gallery {

/**
 * One machine-checkable claim about a named gallery object. `provenance` is
 * one of reference-example, independent-oracle, by-definition; `anchor`
 * names the claim being reproduced.
 *
 * Subspace arguments are `0`, `all`, or comma-separated element expressions
 * (`X,t*Y+Z`). Series are `|`-separated subspaces from 0 to all. Radical and
 * reductivity checks take `` (the algebra), `sub:S` or `quot:S`.
 */
struct FixtureRow {
    std::string check;
    std::string argument;
    std::string expected;
    std::string provenance;
    std::string anchor;
};

struct Fixture {
    std::string target;  // gallery name
    bool hopf = false;
    std::vector<FixtureRow> rows;
};

const std::vector<Fixture>& fixtures();

struct RowOutcome {
    FixtureRow row;
    std::string actual;
    bool pass = false;
};

/// Evaluates every row; errors inside a check are reported as `error: ...` and fail the row.
std::vector<RowOutcome> run_fixture(const Fixture& fx);

/// Evaluates a single check against a gallery name (used by the CLI).
std::string evaluate(const std::string& target, bool hopf, const std::string& check, const std::string& argument);

}  // namespace radu::gallery

#endif
