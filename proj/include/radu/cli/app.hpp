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

#ifndef RADU_CLI_APP_HPP
#define RADU_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace radu::cli {

inline constexpr const char* kToolName = "radu";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 a verdict was produced (whatever its value), 1 usage error,
/// 2 unreadable or malformed input, 3 operational failure (cap exceeded,
/// refused union, inconsistent state).
enum ExitCode : int { ok = 0, usage = 1, bad_input = 2, failure = 3 };

/**
 * Runs one command. `args` excludes the program name. The human-readable
 * report goes to `out`, diagnostics to `err`. When a verdict is produced the
 * certificate is stored in `certificate` (if given) and written to the
 * `--json` path (if set).
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        nlohmann::ordered_json* certificate = nullptr);

/// Hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace radu::cli

#endif
