// Copyright 2026 The sapprox Authors
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

#ifndef SAPPROX_ERRORS_HPP_
#define SAPPROX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sapprox {

// Base of every error the library throws. The CLI maps subclasses to exit
// codes, so new error kinds should derive from one of the leaves below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A universe or search space exceeds a hard cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the domain of the operation (empty left argument,
// masks from universes of different sizes, malformed partition, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of the callee does not hold, e.g. asking for the
// atoms of a function that is not minimizing.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Two spaces do not satisfy the size hypotheses of the degree criterion.
// Distinct from a negative homeomorphism answer.
class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagreed. Always a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

// Malformed space document syntax.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed document whose content breaks an invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace sapprox

#endif  // SAPPROX_ERRORS_HPP_
