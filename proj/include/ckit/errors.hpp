/*
 * Copyright 2026 commutator-kit contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation index out of range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Argument tuple length does not match the operation's arity.
class ArityError : public Error {
public:
    using Error::Error;
};

/// Element or size outside the admissible domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two relations over different universe sizes were combined.
class SizeMismatch : public Error {
public:
    using Error::Error;
};

/// A partition supplied where a congruence was required.
class NotACongruence : public Error {
public:
    using Error::Error;
};

/// Target pair is not in the generated congruence.
class NotInCongruence : public Error {
public:
    using Error::Error;
};

/// A result the theory guarantees failed its own check. Always a bug.
class InternalInvariantViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line == 0 ? what
                          : what + " (line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct Violation {
    std::string op;     // empty for algebra-level violations
    std::size_t index;  // offending table index, or 0
    std::string message;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations);

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

}  // namespace ckit
