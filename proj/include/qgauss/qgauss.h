// Copyright 2026 The qgauss Authors
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

/* C interface to the qgauss verification engine. */
#ifndef QGAUSS_QGAUSS_H
#define QGAUSS_QGAUSS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define QGAUSS_API __attribute__((visibility("default")))
#else
#define QGAUSS_API
#endif

typedef enum qgauss_status {
  QGAUSS_OK = 0,
  QGAUSS_E_INVALID_ARGUMENT = 1, /* null handle or unknown key */
  QGAUSS_E_INVALID_CONFIG = 2,   /* rejected parameter value */
  QGAUSS_E_PARSE = 3,            /* malformed number or table */
  QGAUSS_E_DEGENERATE_SCALAR = 4,
  QGAUSS_E_POLE = 5,
  QGAUSS_E_WINDOW = 6,
  QGAUSS_E_SHAPE = 7,
  QGAUSS_E_SINGULAR = 8,
  QGAUSS_E_SINGULAR_LEADING_TERM = 9,
  QGAUSS_E_NORMALIZATION = 10,
  QGAUSS_E_INTERNAL = 11
} qgauss_status;

typedef enum qgauss_format { QGAUSS_FORMAT_TEXT = 0, QGAUSS_FORMAT_JSON = 1 } qgauss_format;

typedef struct qgauss_config qgauss_config;
typedef struct qgauss_result qgauss_result;

QGAUSS_API const char* qgauss_version(void);

/* Message for the last failing call on this thread; empty if none. */
QGAUSS_API const char* qgauss_last_error(void);

QGAUSS_API qgauss_status qgauss_config_create(qgauss_config** out);
QGAUSS_API void qgauss_config_destroy(qgauss_config* cfg);

/* Keys: n, order, convention (literal|corrected), q and a (symbolic or a
   rational such as 3/2), suites (comma separated), threads, symbolic_cap. */
QGAUSS_API qgauss_status qgauss_config_set(qgauss_config* cfg, const char* key, const char* value);

/* Parses key=value lines; blank lines and lines starting with '#' are ignored. */
QGAUSS_API qgauss_status qgauss_config_load(qgauss_config* cfg, const char* text);

QGAUSS_API qgauss_status qgauss_run(const qgauss_config* cfg, qgauss_result** out);
QGAUSS_API void qgauss_result_destroy(qgauss_result* res);

/* 1 when every counted verdict passed, else 0. */
QGAUSS_API int qgauss_result_passed(const qgauss_result* res);
QGAUSS_API size_t qgauss_result_count(const qgauss_result* res);

/* Renders the report bundle; free the string with qgauss_string_free. */
QGAUSS_API qgauss_status qgauss_result_render(const qgauss_result* res, qgauss_format format, char** out);

/* The R-matrix for the configured n, convention and q. */
QGAUSS_API qgauss_status qgauss_build_r(const qgauss_config* cfg, qgauss_format format, char** out);

/* JSON coefficient tables of the evaluation L-operator pair. */
QGAUSS_API qgauss_status qgauss_export(const qgauss_config* cfg, char** out);

/* JSON coefficient tables of the partial Gauss factors of L+ and L-. */
QGAUSS_API qgauss_status qgauss_decompose(const qgauss_config* cfg, char** out);

QGAUSS_API void qgauss_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* QGAUSS_QGAUSS_H */
