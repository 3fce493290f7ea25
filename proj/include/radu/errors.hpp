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

#ifndef RADU_ERRORS_HPP
#define RADU_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radu {

/// Operation not defined for this kind of scalar domain (e.g. division in a coordinate ring).
class UnsupportedKind : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class FieldMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Structure constants violate an axiom; what() names the first failed identity.
class InvalidAlgebra : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A subspace lacks a closure property an operation requires (ideal, p-ideal, subalgebra).
class NotAPIdeal : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A family of subgroups has two members with no common upper bound in the family.
class NonDirectedFamily : public std::invalid_argument {
   public:
    NonDirectedFamily(const std::string& message, std::size_t first, std::size_t second)
        : std::invalid_argument(message), first_(first), second_(second) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

   private:
    std::size_t first_;
    std::size_t second_;
};

/// Input exceeds a configured size limit.
class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Text input could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(message, line, column)), message_(message), line_(line), column_(column) {}

    /// The message without the position prefix.
    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0) return message;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace radu

#endif
