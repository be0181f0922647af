// Copyright 2026 The spohn-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPOHNKIT_ERRORS_HPP_
#define SPOHNKIT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spohnkit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::string field)
      : Error(Format(message, line, field)), line_(line), field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  static std::string Format(const std::string& message, std::size_t line,
                            const std::string& field) {
    std::string out = "parse error";
    if (line > 0) out += " at line " + std::to_string(line);
    if (!field.empty()) out += " in field '" + field + "'";
    return out + ": " + message;
  }

  std::size_t line_;
  std::string field_;
};

// Well-formed input that violates a domain invariant (shape mismatch,
// zero tensor, distribution not summing to one, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A caller passed an index or operand outside the operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// The conditional expected payoff E^(i)_k is undefined because the
// marginal of strategy k of player i vanishes (the point lies on a W plane).
class UndefinedConditionalPayoff : public Error {
 public:
  UndefinedConditionalPayoff(int player, int strategy)
      : Error("undefined conditional payoff: marginal of player " +
              std::to_string(player + 1) + ", strategy " +
              std::to_string(strategy + 1) + " is zero"),
        player_(player),
        strategy_(strategy) {}

  int player() const { return player_; }
  int strategy() const { return strategy_; }

 private:
  int player_;
  int strategy_;
};

// Raised by the root isolator for the zero polynomial. Callers in the
// sampler read it as a positive-dimensional slice.
class IdenticallyZero : public Error {
 public:
  IdenticallyZero() : Error("polynomial is identically zero") {}
};

// Two independent computations that must agree did not.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace spohnkit

#endif  // SPOHNKIT_ERRORS_HPP_
