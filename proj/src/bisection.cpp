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

#include "dedekind/bisection.hpp"

namespace dedekind {

Rational dedekind_value(const Rational& a0, const Rational& b0, const SequenceSpec& spec) {
  if (!(a0 < b0)) throw DomainError("dedekind_value requires a0 < b0");
  if (spec.base() != 2) throw DomainError("dedekind_value needs a base-2 sequence");
  return affine_from_unit(value_exact(spec), a0, b0);
}

}  // namespace dedekind
