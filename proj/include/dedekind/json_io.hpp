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

#ifndef DEDEKIND_JSON_IO_HPP_
#define DEDEKIND_JSON_IO_HPP_

#include <json.hpp>

#include <string_view>

#include "dedekind/bisection.hpp"
#include "dedekind/dedekind_set.hpp"
#include "dedekind/hyperreal.hpp"
#include "dedekind/randomness.hpp"
#include "dedekind/sequences.hpp"

// JSON forms of the library types. Exact numbers always travel as strings
// ("p/q"), never as JSON numbers. Readers throw DomainError on schema
// violations and ParseError on malformed text.
namespace dedekind::json {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text);

// {"base": 2, "preamble": "10", "period": "01"}
SequenceSpec sequence_from_json(const Json& j);
Json to_json(const SequenceSpec& spec);

// {"base": 2, "strings": ["0", "11"]}
StringSet string_set_from_json(const Json& j);

// {"base": 2, "levels": [["0"], ["00"]], "bounds": ["1/2", "1/4"]}
NullCoverSpec null_cover_from_json(const Json& j);
Json to_json(const NullCoverVerdict& verdict);

Json to_json(const DedekindSetDescriptor& descriptor);
Json to_json(const RandomnessReport& report);
Json to_json(const RelativeWitness& witness);
Json to_json(const ArchimedeanResult& result);

template <Scalar S>
Json interval_to_json(const Interval<S>& iv) {
  return Json::array({iv.lo.to_string(), iv.hi.to_string()});
}

template <Scalar S>
Json to_json(const IntervalChain<S>& chain) {
  Json steps = Json::array();
  for (const auto& step : chain.steps) steps.push_back(interval_to_json(step));
  return Json{{"start", interval_to_json(chain.start)},
              {"bits", chain.bits.to_string()},
              {"steps", std::move(steps)},
              {"final", interval_to_json(chain.final_interval())}};
}

}  // namespace dedekind::json

#endif  // DEDEKIND_JSON_IO_HPP_
