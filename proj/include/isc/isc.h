/* Copyright 2026 The isc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the intersecting subset code library.
 *
 * Every function returns an isc_status. On failure, isc_last_error() holds a
 * message for the calling thread until its next call into the library.
 * Strings returned through `char **` are owned by the caller and must be
 * released with isc_string_free.
 */

#ifndef ISC_ISC_H
#define ISC_ISC_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(ISC_BUILDING_LIBRARY)
#define ISC_API __declspec(dllexport)
#else
#define ISC_API __declspec(dllimport)
#endif
#else
#define ISC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum isc_status {
    ISC_OK = 0,
    ISC_ERR_NULL_ARGUMENT = 1,
    ISC_ERR_PARSE = 2,
    ISC_ERR_INVALID_CODE = 3,
    ISC_ERR_IO = 4,
    ISC_ERR_NOT_FOUND = 5,
    ISC_ERR_INVALID_ARGUMENT = 6,
    ISC_ERR_INTERNAL = 99
} isc_status;

typedef enum isc_method { ISC_METHOD_FORMULA = 0, ISC_METHOD_ORACLE = 1, ISC_METHOD_BOTH = 2 } isc_method;

typedef enum isc_direction { ISC_DECREASING = 0, ISC_INCREASING = 1 } isc_direction;

typedef struct isc_oracle_options {
    /* Largest kernel dimension the brute-force oracle will enumerate. */
    size_t dim_cap;
    size_t threads;
} isc_oracle_options;

/* An immutable built code. */
typedef struct isc_code isc_code;

ISC_API const char *isc_version(void);
ISC_API const char *isc_status_name(isc_status status);
ISC_API const char *isc_last_error(void);
ISC_API void isc_string_free(char *s);

/* dim_cap 26, one thread. */
ISC_API isc_oracle_options isc_default_oracle_options(void);

ISC_API isc_status isc_code_from_json(const char *spec_json, isc_code **out);
ISC_API isc_status isc_code_from_file(const char *path, isc_code **out);
ISC_API void isc_code_free(isc_code *code);

ISC_API isc_status isc_code_dimensions(const isc_code *code, size_t *n, size_t *k, size_t *m);
ISC_API isc_status isc_code_params_json(const isc_code *code, char **out_json);
/* Writes hx.alist, hz.alist, hx.txt, hz.txt, schedule.json, circuit.txt, params.json. */
ISC_API isc_status isc_code_write(const isc_code *code, const char *dir);

/* Verifies a spec file; a spec that cannot be built yields a failing report,
 * not an error. */
ISC_API isc_status isc_verify_spec_file(
    const char *path, const isc_oracle_options *options, char **out_json, int *all_passed);

ISC_API isc_status isc_distance_spec_file(
    const char *path, isc_method method, const isc_oracle_options *options, char **out_json);

ISC_API isc_status isc_catalog_list_json(char **out_json);
ISC_API isc_status isc_catalog_show_json(const char *name, char **out_json);
/* name == NULL verifies every entry. */
ISC_API isc_status isc_catalog_verify_json(
    const char *name, const isc_oracle_options *options, char **out_json, int *all_passed);

/* gens_json and nested_json are arrays of binary tuples ("0110" or [0,1,1,0]);
 * nested_json may be NULL. */
ISC_API isc_status isc_grm_json(
    size_t m,
    const char *gens_json,
    isc_direction direction,
    const char *nested_json,
    const isc_oracle_options *options,
    char **out_json);

#ifdef __cplusplus
}
#endif

#endif
