/*
 * Copyright 2026 The lttw Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the checker. A session owns one signature; every function
 * returns a status code (LTTW_OK on success) and leaves a rendered
 * diagnostic behind for lttw_last_error. Strings returned through `char**`
 * are owned by the caller and released with lttw_string_free.
 */

#ifndef LTTW_LTTW_H_
#define LTTW_LTTW_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LTTW_API __declspec(dllexport)
#else
#define LTTW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lttw_session lttw_session;

/* One code per diagnostic class, in a fixed order. */
typedef enum lttw_status {
  LTTW_OK = 0,
  LTTW_SYNTAX_ERROR,
  LTTW_UNTERMINATED_COMMAND,
  LTTW_DUPLICATE_NAME,
  LTTW_ILL_FORMED_KIND,
  LTTW_NON_LINEAR_PATTERN,
  LTTW_HEAD_NOT_CONSTANT,
  LTTW_KIND_MISMATCH,
  LTTW_UNKNOWN_CONSTANT,
  LTTW_UNBOUND_VARIABLE,
  LTTW_NOT_A_PRODUCT,
  LTTW_DOMAIN_MISMATCH,
  LTTW_ASCRIPTION_MISMATCH,
  LTTW_ILL_TYPED,
  LTTW_NOT_FOUND,
  LTTW_FUEL_EXHAUSTED,
  LTTW_DUPLICATE_VARIABLE,
  LTTW_UNSOLVED_META,
  LTTW_UNIFICATION_FAILURE,
  LTTW_OCCURS_CHECK,
  LTTW_SCOPE_ESCAPE,
  LTTW_OVERLAPPING_RULE,
  LTTW_BAD_PATTERN,
  LTTW_IO_ERROR,
  LTTW_MISMATCHED_OUTCOME,
  LTTW_INVALID_ARGUMENT,
  LTTW_INTERNAL_ERROR
} lttw_status;

typedef enum lttw_mode {
  LTTW_MODE_PREDICATIVE = 0,
  LTTW_MODE_IMPREDICATIVE = 1
} lttw_mode;

typedef struct lttw_config {
  lttw_mode mode;
  int prop_at_type;            /* nonzero: declare prop : Type */
  uint64_t fuel;               /* reduction steps per kernel question */
  const char* stdlib_dir;      /* NULL: empty signature */
  const char* stdlib_manifest; /* NULL: <stdlib_dir>/manifest.txt */
} lttw_config;

LTTW_API void lttw_config_init(lttw_config* cfg);

/* Creates a session and loads the standard library. On failure *out is
 * NULL and the diagnostic is available through lttw_last_error(NULL). */
LTTW_API int lttw_session_new(const lttw_config* cfg, lttw_session** out);
LTTW_API void lttw_session_free(lttw_session* s);

/* Checks a script. On success *output (if non-NULL) receives the results
 * of its TypeOf/Reduce/Check directives, one per line. A rejected script
 * leaves the signature unchanged. */
LTTW_API int lttw_check_file(lttw_session* s, const char* path, char** output);
LTTW_API int lttw_check_source(lttw_session* s, const char* text,
                               const char* name, char** output);

/* Elaborates a term and prints its kind / its normal form. */
LTTW_API int lttw_typeof(lttw_session* s, const char* term, char** out);
LTTW_API int lttw_reduce(lttw_session* s, const char* term, char** out);

/* Number of constants, definitions and computation rules in the signature. */
LTTW_API size_t lttw_constant_count(const lttw_session* s);
LTTW_API size_t lttw_definition_count(const lttw_session* s);
LTTW_API size_t lttw_rule_count(const lttw_session* s);

/* Re-checks every recorded extension of the session's signature with the
 * kernel alone, bypassing the elaborator. The session is not modified. */
LTTW_API int lttw_replay(lttw_session* s);

/* Checks every entry of a corpus manifest in a fresh session. *report
 * receives one line per file and a summary line. Returns
 * LTTW_MISMATCHED_OUTCOME if any file's outcome differs from the manifest. */
LTTW_API int lttw_run_corpus(const lttw_config* cfg, const char* manifest,
                             char** report);

/* Rendered diagnostic of the last failing call on `s` (or of the last
 * failing lttw_session_new / lttw_run_corpus when `s` is NULL, per thread).
 * Valid until the next call on the same session. Empty if none. */
LTTW_API const char* lttw_last_error(const lttw_session* s);

LTTW_API const char* lttw_status_name(int status);
LTTW_API void lttw_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif /* LTTW_LTTW_H_ */
