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

#include "dedekind/dedekind.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "dedekind/bisection.hpp"
#include "dedekind/dedekind_set.hpp"
#include "dedekind/errors.hpp"
#include "dedekind/hyperreal.hpp"
#include "dedekind/json_io.hpp"
#include "dedekind/randomness.hpp"
#include "dedekind/sequences.hpp"

struct ddk_sequence {
  dedekind::SequenceSpec value;
};

struct ddk_hyperreal {
  dedekind::Hyperreal value;
};

namespace {

using dedekind::Hyperreal;
using dedekind::Rational;
using dedekind::SequenceSpec;

thread_local std::string g_last_error;

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename T>
const T& deref(const T* p, const char* name) {
  if (p == nullptr) throw InvalidArgument(std::string(name) + " is NULL");
  return *p;
}

const char* text(const char* p, const char* name) {
  if (p == nullptr) throw InvalidArgument(std::string(name) + " is NULL");
  return p;
}

template <typename T>
T* out_ptr(T* p, const char* name) {
  if (p == nullptr) throw InvalidArgument(std::string(name) + " is NULL");
  return p;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
ddk_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return DDK_OK;
  } catch (const InvalidArgument& e) {
    g_last_error = e.what();
    return DDK_ERROR_INVALID_ARGUMENT;
  } catch (const dedekind::ParseError& e) {
    g_last_error = e.what();
    return DDK_ERROR_PARSE;
  } catch (const dedekind::DomainError& e) {
    g_last_error = e.what();
    return DDK_ERROR_DOMAIN;
  } catch (const dedekind::ArithmeticError& e) {
    g_last_error = e.what();
    return DDK_ERROR_ARITHMETIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DDK_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DDK_ERROR_INTERNAL;
  }
}

void emit(char** out, const std::string& s) { *out_ptr(out, "out") = copy_string(s); }

void emit(char** out, const dedekind::json::Json& j) { emit(out, j.dump()); }

void emit(ddk_sequence** out, SequenceSpec spec) {
  *out_ptr(out, "out") = new ddk_sequence{std::move(spec)};
}

void emit(ddk_hyperreal** out, Hyperreal x) {
  *out_ptr(out, "out") = new ddk_hyperreal{std::move(x)};
}

Rational rational(const char* p, const char* name) { return Rational::parse(text(p, name)); }

const SequenceSpec& seq(const ddk_sequence* s) { return deref(s, "sequence").value; }

const Hyperreal& hyper(const ddk_hyperreal* h, const char* name) { return deref(h, name).value; }

}  // namespace

extern "C" {

const char* ddk_version(void) { return "1.0.0"; }

const char* ddk_last_error(void) { return g_last_error.c_str(); }

const char* ddk_status_name(ddk_status status) {
  switch (status) {
    case DDK_OK:
      return "ok";
    case DDK_ERROR_DOMAIN:
      return "domain error";
    case DDK_ERROR_ARITHMETIC:
      return "arithmetic error";
    case DDK_ERROR_PARSE:
      return "parse error";
    case DDK_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case DDK_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void ddk_string_free(char* s) { std::free(s); }

ddk_status ddk_sequence_new(unsigned base, const char* preamble, const char* period,
                            ddk_sequence** out) {
  return guarded([&] {
    emit(out, SequenceSpec(base, text(preamble, "preamble"), text(period, "period")));
  });
}

ddk_status ddk_sequence_from_json(const char* json, ddk_sequence** out) {
  return guarded([&] {
    emit(out, dedekind::json::sequence_from_json(dedekind::json::parse(text(json, "json"))));
  });
}

void ddk_sequence_free(ddk_sequence* s) { delete s; }

ddk_status ddk_sequence_to_json(const ddk_sequence* s, char** out) {
  return guarded([&] { emit(out, dedekind::json::to_json(seq(s))); });
}

ddk_status ddk_sequence_prefix(const ddk_sequence* s, size_t n, char** out) {
  return guarded([&] { emit(out, dedekind::prefix(seq(s), n).to_string()); });
}

ddk_status ddk_sequence_value(const ddk_sequence* s, char** out) {
  return guarded([&] { emit(out, dedekind::value_exact(seq(s)).to_string()); });
}

ddk_status ddk_sequence_canonicalize(const ddk_sequence* s, ddk_sequence** out) {
  return guarded([&] { emit(out, dedekind::canonicalize(seq(s))); });
}

ddk_status ddk_sequence_change_basis(const ddk_sequence* s, unsigned target_base,
                                     ddk_sequence** out) {
  return guarded([&] { emit(out, dedekind::change_basis(seq(s), target_base)); });
}

ddk_status ddk_expand(const char* value, unsigned base, ddk_sequence** out) {
  return guarded([&] { emit(out, dedekind::expand(rational(value, "value"), base)); });
}

ddk_status ddk_finite_value(unsigned base, const char* digits, char** out) {
  return guarded([&] {
    emit(out, dedekind::finite_value(dedekind::DigitString::parse(base, text(digits, "digits")))
                  .to_string());
  });
}

ddk_status ddk_encode(const char* value, const char* lo, const char* hi, size_t depth,
                      char** out_bits) {
  return guarded([&] {
    emit(out_bits, dedekind::encode(rational(value, "value"), rational(lo, "lo"),
                                    rational(hi, "hi"), depth)
                       .to_string());
  });
}

ddk_status ddk_decode(const char* lo, const char* hi, const char* bits, char** out_json) {
  return guarded([&] {
    const auto chain = dedekind::interval_chain(
        dedekind::parse_hyperreal(text(lo, "lo")), dedekind::parse_hyperreal(text(hi, "hi")),
        dedekind::DigitString::parse(2, text(bits, "bits")));
    emit(out_json, dedekind::json::to_json(chain));
  });
}

ddk_status ddk_dedekind_value(const char* lo, const char* hi, const ddk_sequence* s, char** out) {
  return guarded([&] {
    emit(out, dedekind::dedekind_value(rational(lo, "lo"), rational(hi, "hi"), seq(s)).to_string());
  });
}

ddk_status ddk_hyperreal_parse(const char* t, ddk_hyperreal** out) {
  return guarded([&] { emit(out, dedekind::parse_hyperreal(text(t, "text"))); });
}

ddk_status ddk_hyperreal_evaluate(const char* t, ddk_hyperreal** out) {
  return guarded([&] { emit(out, dedekind::evaluate_expression(text(t, "text"))); });
}

void ddk_hyperreal_free(ddk_hyperreal* x) { delete x; }

ddk_status ddk_hyperreal_to_string(const ddk_hyperreal* x, char** out) {
  return guarded([&] { emit(out, hyper(x, "x").to_string()); });
}

ddk_status ddk_hyperreal_arithmetic(ddk_arith_op op, const ddk_hyperreal* x,
                                    const ddk_hyperreal* y, ddk_hyperreal** out) {
  return guarded([&] {
    dedekind::ArithmeticKind kind;
    switch (op) {
      case DDK_ADD:
        kind = dedekind::ArithmeticKind::kAdd;
        break;
      case DDK_SUB:
        kind = dedekind::ArithmeticKind::kSub;
        break;
      case DDK_MUL:
        kind = dedekind::ArithmeticKind::kMul;
        break;
      case DDK_DIV:
        kind = dedekind::ArithmeticKind::kDiv;
        break;
      default:
        throw InvalidArgument("unknown arithmetic operation");
    }
    emit(out, dedekind::arithmetic(kind, hyper(x, "x"), hyper(y, "y")));
  });
}

ddk_status ddk_hyperreal_compare(const ddk_hyperreal* x, const ddk_hyperreal* y, int* out) {
  return guarded([&] {
    const auto c = dedekind::compare(hyper(x, "x"), hyper(y, "y"));
    *out_ptr(out, "out") = c == dedekind::Comparison::kLess ? -1
                           : c == dedekind::Comparison::kEqual ? 0
                                                               : 1;
  });
}

ddk_status ddk_hyperreal_classify(const ddk_hyperreal* x, ddk_magnitude* out) {
  return guarded([&] {
    *out_ptr(out, "out") = static_cast<ddk_magnitude>(dedekind::classify(hyper(x, "x")));
  });
}

ddk_status ddk_hyperreal_valuation(const ddk_hyperreal* x, int64_t* out, int* defined) {
  return guarded([&] {
    const auto v = hyper(x, "x").valuation();
    *out_ptr(defined, "defined") = v ? 1 : 0;
    if (v) *out_ptr(out, "out") = *v;
  });
}

ddk_status ddk_hyperreal_std(const ddk_hyperreal* x, char** out) {
  return guarded([&] { emit(out, dedekind::standard_part(hyper(x, "x")).to_string()); });
}

ddk_status ddk_hyperreal_closeness(ddk_closeness mode, const ddk_hyperreal* x,
                                   const ddk_hyperreal* y, int* out) {
  return guarded([&] {
    if (mode != DDK_INFINITESIMALLY_CLOSE && mode != DDK_FINITELY_DISTANT) {
      throw InvalidArgument("unknown closeness mode");
    }
    const auto m = mode == DDK_INFINITESIMALLY_CLOSE ? dedekind::Closeness::kInfinitesimallyClose
                                                     : dedekind::Closeness::kFinitelyDistant;
    *out_ptr(out, "out") = dedekind::closeness(m, hyper(x, "x"), hyper(y, "y")) ? 1 : 0;
  });
}

ddk_status ddk_archimedean_check(const ddk_hyperreal* a, const ddk_hyperreal* b, uint64_t n_max,
                                 char** out_json) {
  return guarded([&] {
    emit(out_json,
         dedekind::json::to_json(dedekind::archimedean_check(hyper(a, "a"), hyper(b, "b"), n_max)));
  });
}

ddk_status ddk_dedekind_classify(const ddk_hyperreal* a0, const ddk_hyperreal* b0,
                                 const ddk_sequence* s, ddk_ambient ambient, char** out_json) {
  return guarded([&] {
    if (ambient != DDK_AMBIENT_HYPERREAL && ambient != DDK_AMBIENT_RATIONAL) {
      throw InvalidArgument("unknown ambient field");
    }
    const auto field = ambient == DDK_AMBIENT_RATIONAL ? dedekind::AmbientField::kRational
                                                       : dedekind::AmbientField::kHyperreal;
    emit(out_json, dedekind::json::to_json(
                       dedekind::classify_dedekind_set(hyper(a0, "a0"), hyper(b0, "b0"), seq(s), field)));
  });
}

ddk_status ddk_dedekind_member(const ddk_hyperreal* d, const ddk_hyperreal* a0,
                               const ddk_hyperreal* b0, const ddk_sequence* s, size_t depth,
                               int* out) {
  return guarded([&] {
    *out_ptr(out, "out") =
        dedekind::membership_at_depth(hyper(d, "d"), hyper(a0, "a0"), hyper(b0, "b0"), seq(s), depth)
            ? 1
            : 0;
  });
}

ddk_status ddk_random_hyperreal(const ddk_sequence* s, const ddk_hyperreal* eps,
                                ddk_hyperreal** out) {
  return guarded([&] { emit(out, dedekind::random_hyperreal(seq(s), hyper(eps, "eps"))); });
}

ddk_status ddk_decompose(const ddk_hyperreal* h, char** out_std,
                         ddk_hyperreal** out_infinitesimal) {
  return guarded([&] {
    out_ptr(out_std, "out_std");
    out_ptr(out_infinitesimal, "out_infinitesimal");
    auto parts = dedekind::decompose(hyper(h, "h"));
    char* std_text = copy_string(parts.std_part.to_string());
    try {
      emit(out_infinitesimal, std::move(parts.infinitesimal_part));
    } catch (...) {
      std::free(std_text);
      throw;
    }
    *out_std = std_text;
  });
}

ddk_status ddk_cylinder_measure(const char* string_set_json, char** out) {
  return guarded([&] {
    const auto set = dedekind::json::string_set_from_json(
        dedekind::json::parse(text(string_set_json, "string_set_json")));
    emit(out, dedekind::cylinder_measure(set).to_string());
  });
}

ddk_status ddk_covers(const ddk_sequence* s, const char* string_set_json, int* out) {
  return guarded([&] {
    const auto set = dedekind::json::string_set_from_json(
        dedekind::json::parse(text(string_set_json, "string_set_json")));
    *out_ptr(out, "out") = dedekind::covers(seq(s), set) ? 1 : 0;
  });
}

ddk_status ddk_verify_null_cover(const char* cover_json, const ddk_sequence* target,
                                 char** out_json) {
  return guarded([&] {
    const auto cover =
        dedekind::json::null_cover_from_json(dedekind::json::parse(text(cover_json, "cover_json")));
    std::optional<SequenceSpec> t;
    if (target != nullptr) t = target->value;
    emit(out_json, dedekind::json::to_json(dedekind::verify_null_cover(cover, t)));
  });
}

ddk_status ddk_rationality_verdict(const ddk_sequence* s, char** out_value) {
  return guarded([&] {
    const auto verdict = dedekind::rationality_verdict(seq(s));
    emit(out_value, std::get<dedekind::RationalVerdict>(verdict).value.to_string());
  });
}

ddk_status ddk_battery(const char* bits, double alpha, const size_t* block_sizes,
                       size_t n_block_sizes, char** out_json) {
  return guarded([&] {
    dedekind::BatteryConfig config;
    config.alpha = alpha;
    if (n_block_sizes > 0) {
      if (block_sizes == nullptr) throw InvalidArgument("block_sizes is NULL");
      config.block_sizes.assign(block_sizes, block_sizes + n_block_sizes);
    }
    const auto sample = dedekind::parse_bit_sample(text(bits, "bits"));
    emit(out_json, dedekind::json::to_json(dedekind::battery(sample, config)));
  });
}

ddk_status ddk_relative_random_witness(const char* a1, const char* b1, const char* a2,
                                       const char* b2, const ddk_sequence* s, char** out_json) {
  return guarded([&] {
    emit(out_json, dedekind::json::to_json(dedekind::relative_random_witness(
                       rational(a1, "a1"), rational(b1, "b1"), rational(a2, "a2"),
                       rational(b2, "b2"), seq(s))));
  });
}

}  // extern "C"
