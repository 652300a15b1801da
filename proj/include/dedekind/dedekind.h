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

/*
 * C interface to the dedekind library.
 *
 * Every fallible function returns a ddk_status. On failure the message is
 * available from ddk_last_error() on the same thread until the next call.
 * Exact numbers cross the boundary as text ("p/q"); strings returned through
 * char** out-parameters are heap allocated and released with
 * ddk_string_free(). Handles are released with their matching *_free
 * function, which accepts NULL.
 */
#ifndef DEDEKIND_DEDEKIND_H_
#define DEDEKIND_DEDEKIND_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DEDEKIND_BUILDING_LIBRARY)
#define DDK_API __declspec(dllexport)
#else
#define DDK_API __declspec(dllimport)
#endif
#else
#define DDK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ddk_status {
  DDK_OK = 0,
  DDK_ERROR_DOMAIN = 1,
  DDK_ERROR_ARITHMETIC = 2,
  DDK_ERROR_PARSE = 3,
  DDK_ERROR_INVALID_ARGUMENT = 4,
  DDK_ERROR_INTERNAL = 5
} ddk_status;

typedef enum ddk_arith_op { DDK_ADD = 0, DDK_SUB = 1, DDK_MUL = 2, DDK_DIV = 3 } ddk_arith_op;

typedef enum ddk_magnitude {
  DDK_ZERO = 0,
  DDK_INFINITESIMAL = 1,
  DDK_APPRECIABLE = 2,
  DDK_UNBOUNDED = 3
} ddk_magnitude;

typedef enum ddk_closeness {
  DDK_INFINITESIMALLY_CLOSE = 0,
  DDK_FINITELY_DISTANT = 1
} ddk_closeness;

typedef enum ddk_ambient { DDK_AMBIENT_HYPERREAL = 0, DDK_AMBIENT_RATIONAL = 1 } ddk_ambient;

typedef struct ddk_sequence ddk_sequence;
typedef struct ddk_hyperreal ddk_hyperreal;

DDK_API const char* ddk_version(void);
DDK_API const char* ddk_last_error(void);
DDK_API const char* ddk_status_name(ddk_status status);
DDK_API void ddk_string_free(char* s);

/* Eventually periodic sequences. */
DDK_API ddk_status ddk_sequence_new(unsigned base, const char* preamble, const char* period,
                                    ddk_sequence** out);
/* {"base": 2, "preamble": "10", "period": "01"} */
DDK_API ddk_status ddk_sequence_from_json(const char* json, ddk_sequence** out);
DDK_API void ddk_sequence_free(ddk_sequence* seq);
DDK_API ddk_status ddk_sequence_to_json(const ddk_sequence* seq, char** out);
DDK_API ddk_status ddk_sequence_prefix(const ddk_sequence* seq, size_t n, char** out);
DDK_API ddk_status ddk_sequence_value(const ddk_sequence* seq, char** out);
DDK_API ddk_status ddk_sequence_canonicalize(const ddk_sequence* seq, ddk_sequence** out);
DDK_API ddk_status ddk_sequence_change_basis(const ddk_sequence* seq, unsigned target_base,
                                             ddk_sequence** out);
DDK_API ddk_status ddk_expand(const char* rational, unsigned base, ddk_sequence** out);
DDK_API ddk_status ddk_finite_value(unsigned base, const char* digits, char** out);

/* Halving chains over [lo, hi]. */
DDK_API ddk_status ddk_encode(const char* value, const char* lo, const char* hi, size_t depth,
                              char** out_bits);
/* lo and hi are hyperreal expressions; the chain is returned as JSON. */
DDK_API ddk_status ddk_decode(const char* lo, const char* hi, const char* bits, char** out_json);
DDK_API ddk_status ddk_dedekind_value(const char* lo, const char* hi, const ddk_sequence* seq,
                                      char** out);

/* Hyperreals. */
DDK_API ddk_status ddk_hyperreal_parse(const char* text, ddk_hyperreal** out);
/* As ddk_hyperreal_parse, additionally accepting std(expr). */
DDK_API ddk_status ddk_hyperreal_evaluate(const char* text, ddk_hyperreal** out);
DDK_API void ddk_hyperreal_free(ddk_hyperreal* x);
DDK_API ddk_status ddk_hyperreal_to_string(const ddk_hyperreal* x, char** out);
DDK_API ddk_status ddk_hyperreal_arithmetic(ddk_arith_op op, const ddk_hyperreal* x,
                                            const ddk_hyperreal* y, ddk_hyperreal** out);
/* *out is -1, 0 or 1. */
DDK_API ddk_status ddk_hyperreal_compare(const ddk_hyperreal* x, const ddk_hyperreal* y, int* out);
DDK_API ddk_status ddk_hyperreal_classify(const ddk_hyperreal* x, ddk_magnitude* out);
/* *defined is 0 for zero, in which case *out is left untouched. */
DDK_API ddk_status ddk_hyperreal_valuation(const ddk_hyperreal* x, int64_t* out, int* defined);
DDK_API ddk_status ddk_hyperreal_std(const ddk_hyperreal* x, char** out);
DDK_API ddk_status ddk_hyperreal_closeness(ddk_closeness mode, const ddk_hyperreal* x,
                                           const ddk_hyperreal* y, int* out);
DDK_API ddk_status ddk_archimedean_check(const ddk_hyperreal* a, const ddk_hyperreal* b,
                                         uint64_t n_max, char** out_json);

/* Dedekind sets. */
DDK_API ddk_status ddk_dedekind_classify(const ddk_hyperreal* a0, const ddk_hyperreal* b0,
                                         const ddk_sequence* seq, ddk_ambient ambient,
                                         char** out_json);
DDK_API ddk_status ddk_dedekind_member(const ddk_hyperreal* d, const ddk_hyperreal* a0,
                                       const ddk_hyperreal* b0, const ddk_sequence* seq,
                                       size_t depth, int* out);
DDK_API ddk_status ddk_random_hyperreal(const ddk_sequence* seq, const ddk_hyperreal* eps,
                                        ddk_hyperreal** out);
DDK_API ddk_status ddk_decompose(const ddk_hyperreal* h, char** out_std,
                                 ddk_hyperreal** out_infinitesimal);

/* Randomness. */
/* {"base": 2, "strings": ["0", "11"]} */
DDK_API ddk_status ddk_cylinder_measure(const char* string_set_json, char** out);
DDK_API ddk_status ddk_covers(const ddk_sequence* seq, const char* string_set_json, int* out);
/* target may be NULL. */
DDK_API ddk_status ddk_verify_null_cover(const char* cover_json, const ddk_sequence* target,
                                         char** out_json);
DDK_API ddk_status ddk_rationality_verdict(const ddk_sequence* seq, char** out_value);
/* block_sizes may be NULL with n_block_sizes 0 for the defaults. */
DDK_API ddk_status ddk_battery(const char* bits, double alpha, const size_t* block_sizes,
                               size_t n_block_sizes, char** out_json);
DDK_API ddk_status ddk_relative_random_witness(const char* a1, const char* b1, const char* a2,
                                               const char* b2, const ddk_sequence* seq,
                                               char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* DEDEKIND_DEDEKIND_H_ */
