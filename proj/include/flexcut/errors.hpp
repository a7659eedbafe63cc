// Copyright 2026 The flexcut Authors.
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

#ifndef FLEXCUT_ERRORS_HPP_
#define FLEXCUT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace flexcut {

// Caller broke an operation's precondition (empty shore, overlapping sets...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Input cannot be satisfied: instance infeasible, shore uncoverable.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An explicit size or search budget would be exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A proof-backed structural property or certificate did not hold.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flexcut

#endif  // FLEXCUT_ERRORS_HPP_
