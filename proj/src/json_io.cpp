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

#include "dedekind/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

#include "dedekind/errors.hpp"

namespace dedekind::json {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw DomainError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw DomainError(std::string("missing field '") + key + "'");
  return *it;
}

unsigned base_field(const Json& j) {
  const Json& b = field(j, "base");
  if (!b.is_number_integer()) throw DomainError("'base' must be an integer");
  const auto base = b.get<long long>();
  if (base < kMinBase || base > kMaxBase) throw DomainError("'base' outside 2..10");
  return static_cast<unsigned>(base);
}

std::string string_value(const Json& j, const char* what) {
  if (!j.is_string()) throw DomainError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

StringSet string_set_from_array(unsigned base, const Json& array) {
  if (!array.is_array()) throw DomainError("expected an array of digit strings");
  StringSet out(base);
  for (const auto& s : array) out.insert(DigitString::parse(base, string_value(s, "word")));
  return out;
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

SequenceSpec sequence_from_json(const Json& j) {
  const unsigned base = base_field(j);
  return SequenceSpec(base, string_value(field(j, "preamble"), "'preamble'"),
                      string_value(field(j, "period"), "'period'"));
}

Json to_json(const SequenceSpec& spec) {
  return Json{{"base", spec.base()},
              {"preamble", spec.preamble().to_string()},
              {"period", spec.period().to_string()}};
}

StringSet string_set_from_json(const Json& j) {
  return string_set_from_array(base_field(j), field(j, "strings"));
}

NullCoverSpec null_cover_from_json(const Json& j) {
  const unsigned base = base_field(j);
  const Json& levels = field(j, "levels");
  const Json& bounds = field(j, "bounds");
  if (!levels.is_array() || !bounds.is_array()) {
    throw DomainError("'levels' and 'bounds' must be arrays");
  }
  std::vector<StringSet> sets;
  for (const auto& level : levels) sets.push_back(string_set_from_array(base, level));
  std::vector<Rational> limits;
  for (const auto& bound : bounds) limits.push_back(Rational::parse(string_value(bound, "bound")));
  return NullCoverSpec(base, std::move(sets), std::move(limits));
}

Json to_json(const NullCoverVerdict& verdict) {
  Json measures = Json::array();
  for (const auto& m : verdict.level_measures) measures.push_back(m.to_string());
  Json out{{"valid", verdict.valid}, {"level_measures", std::move(measures)}};
  if (!verdict.covered_at.empty()) {
    out["covered_at"] = verdict.covered_at;
    out["target_exhibited_nonrandom"] = verdict.target_exhibited_nonrandom;
  }
  return out;
}

Json to_json(const DedekindSetDescriptor& d) {
  return Json{
      {"case", to_string(d.case_tag)},
      {"cardinality", d.cardinality.to_string()},
      {"std_limit", d.std_limit ? Json(d.std_limit->to_string()) : Json(nullptr)},
      {"contains_all_reals", d.contains_all_reals},
      {"endpoints", Json::array({d.endpoints.first.to_string(), d.endpoints.second.to_string()})},
      {"spec", to_json(d.spec)},
  };
}

Json to_json(const RandomnessReport& report) {
  Json tests = Json::array();
  for (const auto& r : report.records) {
    tests.push_back(Json{{"name", r.name},
                         {"statistic", r.statistic},
                         {"p_value", r.p_value},
                         {"threshold", r.threshold},
                         {"pass", r.pass}});
  }
  return Json{{"sample_length", report.sample_length},
              {"tests", std::move(tests)},
              {"verdict", report.no_test_rejects ? "no_test_rejects" : "rejected"}};
}

Json to_json(const RelativeWitness& w) {
  return Json{{"w", w.w.to_string()},
              {"expansion_in_outer", to_json(w.expansion_in_outer)},
              {"expansions_differ", w.expansions_differ}};
}

Json to_json(const ArchimedeanResult& result) {
  return Json{{"exceeded_at", result.exceeded_at ? Json(*result.exceeded_at) : Json("never")},
              {"symbolic_verdict", to_string(result.verdict)}};
}

}  // namespace dedekind::json
