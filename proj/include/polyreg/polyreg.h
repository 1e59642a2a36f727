// Copyright 2026 The polyreg Authors
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

#ifndef POLYREG_H
#define POLYREG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(POLYREG_BUILDING_LIBRARY)
#define POLYREG_API __attribute__((visibility("default")))
#else
#define POLYREG_API
#endif

typedef enum {
  POLYREG_OK = 0,
  POLYREG_ERR_ARGUMENT = 1, /* null pointer or bad index */
  POLYREG_ERR_PARSE = 2,    /* expression, manifest or JSON syntax */
  POLYREG_ERR_DOMAIN = 3,   /* degenerate input, pole, wrong shape */
  POLYREG_ERR_NUMERIC = 4,  /* quadrature or root certification failed */
  POLYREG_ERR_INTERNAL = 5
} polyreg_status;

/* Element of the symbol complex. */
typedef struct polyreg_element polyreg_element;

POLYREG_API const char* polyreg_version(void);

/* Message of the last failure on this thread ("" when none). */
POLYREG_API const char* polyreg_last_error(void);

/* Strings returned through char** out-parameters are owned by the caller. */
POLYREG_API void polyreg_string_free(char* s);

POLYREG_API polyreg_status polyreg_element_from_manifest(const char* manifest_json, int lenient,
                                                         polyreg_element** out);
POLYREG_API void polyreg_element_free(polyreg_element* e);
POLYREG_API polyreg_status polyreg_element_to_string(const polyreg_element* e, char** out);
POLYREG_API polyreg_status polyreg_element_to_manifest(const polyreg_element* e, char** out);
POLYREG_API polyreg_status polyreg_element_differential(const polyreg_element* e, polyreg_element** out);
/* 1 when the element is zero, 0 otherwise. */
POLYREG_API polyreg_status polyreg_element_is_zero(const polyreg_element* e, int* out);

/* P_n^mod(re + i im) = coeff * i^twist. */
POLYREG_API polyreg_status polyreg_pmod(int n, double re, double im, double* coeff, int* twist);
POLYREG_API polyreg_status polyreg_pzag(int n, double re, double im, double* coeff, int* twist);

/* Runs a command (eval-pmod, relation, verify-boundary, ...). args_json is a
   JSON object of parameters, optionally with a "manifest" member. On return
   report_json holds the machine report, human (if not NULL) its text form,
   and exit_code is 0 (pass), 1 (verdict failure) or 2 (usage error). The
   status is POLYREG_OK whenever a report was produced. */
POLYREG_API polyreg_status polyreg_dispatch(const char* command, const char* args_json, int lenient,
                                            char** report_json, char** human, int* exit_code);

/* Space-separated list of command names. */
POLYREG_API const char* polyreg_commands(void);

/* Space-separated parameter names of a command, or NULL if unknown. The
   pointer stays valid for the life of the process. */
POLYREG_API const char* polyreg_command_params(const char* command);

#ifdef __cplusplus
}
#endif

#endif
