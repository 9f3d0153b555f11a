// Copyright 2026 The GGQ Authors
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

#ifndef GGQ_ERRORS_H_
#define GGQ_ERRORS_H_

#include <stdexcept>

namespace ggq {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operator or program that fails a structural check (non-unitary, etc).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Query that breaks the active memory policy.
class PolicyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Subroutine exceeding its declared query or depth budget, or a simulation
// exceeding its proven operation bound.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant broken. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed user configuration (CLI flags, schedule files, adversary output).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration or dense buffer larger than the configured cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ggq

#endif  // GGQ_ERRORS_H_
