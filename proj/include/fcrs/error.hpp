// Copyright 2026 The fcrs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FCRS_ERROR_HPP_
#define FCRS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fcrs {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed or out-of-contract input: unknown letters, bad tables,
  //! violated construction preconditions.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  //! A text document failed to parse. Carries the 1-based line number (0 when
  //! the problem is not tied to a line).
  class ParseError : public InputError {
   public:
    ParseError(std::size_t line, std::string const& what)
        : InputError(line == 0 ? what
                               : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  //! A step or exploration budget ran out. Signals that the system may not be
  //! noetherian; recoverable.
  class BudgetExhausted : public Error {
   public:
    using Error::Error;
  };

  //! Raised by coordinatization when the Rees multiplication rule does not
  //! reproduce the input table.
  class NotCompletelyZeroSimple : public InputError {
   public:
    using InputError::InputError;
  };

  //! Self-check failure inside a construction: an emitted system did not
  //! certify. Must never fire on valid input.
  class ConstructionBug : public Error {
   public:
    using Error::Error;
  };

}  // namespace fcrs

#endif  // FCRS_ERROR_HPP_
