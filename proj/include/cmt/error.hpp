// Copyright 2026 The Authors.
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

#ifndef CMT_ERROR_HPP_
#define CMT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmt {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownElement : public Error {
 public:
  using Error::Error;
};

class UnknownColor : public Error {
 public:
  using Error::Error;
};

// Sequence operands that do not share a parent sequence.
class MixedParents : public Error {
 public:
  using Error::Error;
};

// The instance does not meet the hypotheses of the requested solver.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class LoopInInput : public Error {
 public:
  using Error::Error;
};

// A runtime-checked solver invariant failed. Always a bug.
class InternalInvariantBroken : public Error {
 public:
  using Error::Error;
};

class SeedInvalid : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotABasis : public Error {
 public:
  using Error::Error;
};

class InfeasibleRequest : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& what)
      : Error("line " + std::to_string(line) + ", field '" + field +
              "': " + what),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace cmt

#endif  // CMT_ERROR_HPP_
