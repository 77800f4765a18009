// Copyright 2026 The zsmagic Authors
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

#ifndef ZSMAGIC_ERRORS_HPP_
#define ZSMAGIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace zsmagic {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (graph files, group syntax, label files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called on an input that violates its documented
// precondition (unknown vertex, non-cubic graph where cubic is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A construction was requested for a graph that provably admits no labeling
// of the requested kind.
class ObstructionError : public Error {
 public:
  using Error::Error;
};

// A search ran out of its node budget before reaching a verdict.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace zsmagic

#endif  // ZSMAGIC_ERRORS_HPP_
