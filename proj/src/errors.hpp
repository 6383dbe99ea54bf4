// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace gqm {

/// Base of every exception raised by the core. The C API maps each subclass
/// onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or Morse-function text. `line` is 1-based, 0 when the
/// problem is not tied to a line (e.g. a missing value).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller broke an operation's precondition (bad index, negative time,
/// asymmetric input to a symmetric solver, singular conjugator, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A function that was required to be a discrete Morse function is not.
class InvalidMorseError : public Error {
 public:
  using Error::Error;
};

/// An s -> infinity limit was requested on an operator with a growing entry.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Always a bug or corrupted input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace gqm
