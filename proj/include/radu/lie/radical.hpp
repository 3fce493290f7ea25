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

#ifndef RADU_LIE_RADICAL_HPP
#define RADU_LIE_RADICAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radu/lie/analysis.hpp"

namespace radu {

/// Search strategies for a nonzero unipotent p-ideal, tried in this order.
enum class Strategy { abelian, derived, finite_scan, split_weight, random_search };
std::string to_string(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& s);

enum class Verdict { exact, undecided };
std::string to_string(Verdict v);

struct RadicalStep {
    Strategy strategy;
    std::vector<Vec> found_in_quotient;  // basis, in the coordinates of the quotient at that step
    std::vector<std::string> quotient_labels;
    Subspace cumulative;  // radical found so far, in g
};

struct RadicalCertificate {
    Subspace radical;
    Strategy strategy;  // the strategy that certified the last quotient has no further ideal
    std::vector<RadicalStep> trace;
    Verdict verdict = Verdict::exact;
    std::vector<std::string> notes;
};

struct RadicalOptions {
    /// Use only this strategy; a strategy that does not apply yields `undecided`.
    std::optional<Strategy> force;
    std::uint64_t seed = 0;
    std::size_t random_attempts = 200;
};

/// Largest unipotent p-ideal of g.
RadicalCertificate rad_p(const RestrictedLieAlgebra& g, const RadicalOptions& opts = {});

/// Rechecks a trace: every cumulative step must be a unipotent p-ideal containing the previous one.
/// Returns the reconstructed radical; throws std::invalid_argument on an inconsistent certificate.
Subspace replay(const RestrictedLieAlgebra& g, const RadicalCertificate& cert);

struct ReductivityReport {
    Tristate verdict = Tristate::undecided;
    std::string criterion;
    std::string detail;
};

struct ReductivityOptions {
    unsigned max_inseparable_exponent = 4;
    RadicalOptions radical;
};

/// Triviality of the unipotent radical after extension to an algebraic closure.
ReductivityReport is_p_reductive(const RestrictedLieAlgebra& g, const ReductivityOptions& opts = {});

}  // namespace radu

#endif
