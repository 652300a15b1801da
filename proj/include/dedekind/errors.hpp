// Copyright 2026 The Dedekind Authors.
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

#ifndef DEDEKIND_ERRORS_HPP_
#define DEDEKIND_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dedekind {

// An argument lies outside the domain of the operation (bad interval,
// out-of-range digit, value outside [0, 1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Division by a zero element, or a standard part requested for an unbounded
// element.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  // Zero-based offset into the input where parsing stopped.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dedekind

#endif  // DEDEKIND_ERRORS_HPP_
