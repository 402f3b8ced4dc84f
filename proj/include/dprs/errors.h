// Copyright 2026 The dprs Authors
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

#ifndef DPRS_ERRORS_H_
#define DPRS_ERRORS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dprs {

// Malformed input: dimension mismatches, out-of-range parameters.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A linear program (or a party's private polytope) has no feasible point.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what,
                           std::optional<std::size_t> party = std::nullopt)
      : std::runtime_error(what), party_(party) {}
  std::optional<std::size_t> party() const { return party_; }

 private:
  std::optional<std::size_t> party_;
};

class UnboundedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a differentially private run would exceed its iteration budget.
class BudgetExhaustedError : public std::runtime_error {
 public:
  BudgetExhaustedError() : std::runtime_error("privacy budget exhausted") {}
};

// Pivot limit reached or a post-solve certificate check failed.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dprs

#endif  // DPRS_ERRORS_H_
