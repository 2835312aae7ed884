/*
 * Copyright 2026 The refkac Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the refkac engine. Every object is an opaque handle owned by
 * the caller and released with the matching *_free function. Functions return
 * a refkac_status; on failure refkac_last_error() describes the problem (the
 * message is thread-local and valid until the next failing call on the same
 * thread). Strings returned through char** out-parameters are allocated by the
 * library and released with refkac_string_free().
 */
#ifndef REFKAC_REFKAC_H
#define REFKAC_REFKAC_H

#include <stddef.h>
#include <stdint.h>

#if defined(REFKAC_BUILDING_LIBRARY)
#define REFKAC_API __attribute__((visibility("default")))
#else
#define REFKAC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum refkac_status {
  REFKAC_OK = 0,
  REFKAC_ERR_INVALID_ARGUMENT = 1,
  REFKAC_ERR_PARSE = 2,
  REFKAC_ERR_PRECONDITION = 3,
  REFKAC_ERR_DIVISION_BY_ZERO = 4,
  REFKAC_ERR_OUT_OF_RANGE = 5,
  REFKAC_ERR_IO = 6,
  REFKAC_ERR_INTERNAL = 7
} refkac_status;

typedef enum refkac_format {
  REFKAC_FORMAT_TABLE = 0,
  REFKAC_FORMAT_JSON = 1
} refkac_format;

typedef enum refkac_series_kind {
  REFKAC_SERIES_P = 0, /* graded by total dimension */
  REFKAC_SERIES_Q = 1  /* refined, keyed by multiplicity matrices */
} refkac_series_kind;

typedef struct refkac_quiver refkac_quiver;
typedef struct refkac_table refkac_table;
typedef struct refkac_report refkac_report;

/* Pass as max_part / max_level for "no bound". */
#define REFKAC_UNBOUNDED 0u

REFKAC_API const char* refkac_version(void);
REFKAC_API const char* refkac_status_string(refkac_status status);
REFKAC_API const char* refkac_last_error(void);
REFKAC_API void refkac_string_free(char* s);

/* Quivers. Text may be a matrix "[[1,1],[0,1]]" or a JSON document
 * {"vertices": 2, "arrows": [[1,1],[0,1]]}. */
REFKAC_API refkac_status refkac_quiver_parse(const char* text, refkac_quiver** out);
REFKAC_API refkac_status refkac_quiver_load(const char* path, refkac_quiver** out);
REFKAC_API void refkac_quiver_free(refkac_quiver* quiver);
REFKAC_API refkac_status refkac_quiver_vertex_count(const refkac_quiver* quiver, size_t* out);
/* Display label of vertex i (0-based). */
REFKAC_API refkac_status refkac_quiver_label(const refkac_quiver* quiver, size_t i, char** out);
REFKAC_API refkac_status refkac_quiver_has_enough_loops(const refkac_quiver* quiver, int* out);
/* Companion matrix text, e.g. "[[2,2],[0,3]]". */
REFKAC_API refkac_status refkac_quiver_render(const refkac_quiver* quiver, char** out);
/* JSON document including vertex labels. */
REFKAC_API refkac_status refkac_quiver_render_document(const refkac_quiver* quiver, char** out);
REFKAC_API refkac_status refkac_quiver_gamma_m(const refkac_quiver* quiver, unsigned m,
                                               refkac_quiver** out);
REFKAC_API refkac_status refkac_euler_form(const refkac_quiver* quiver, const unsigned* a,
                                           const unsigned* b, size_t len, long* out);

/* Kac tables. */
REFKAC_API refkac_status refkac_kac_table(const refkac_quiver* quiver, unsigned weight,
                                          refkac_table** out);
REFKAC_API refkac_status refkac_refined_table(const refkac_quiver* quiver, unsigned weight,
                                              unsigned max_part, refkac_table** out);
REFKAC_API void refkac_table_free(refkac_table* table);
/* Number of in-bound keys, zero entries included. */
REFKAC_API refkac_status refkac_table_size(const refkac_table* table, size_t* out);
/* Key syntax: "1,2" for dimension vectors, "[2,1];[1]" for partition tuples.
 * The value is rendered in descending powers of q. */
REFKAC_API refkac_status refkac_table_lookup(const refkac_table* table, const char* key,
                                             char** value);
REFKAC_API refkac_status refkac_table_render(const refkac_table* table, refkac_format format,
                                             char** out);
/* Same as render, restricted to a single key. */
REFKAC_API refkac_status refkac_table_render_entry(const refkac_table* table, const char* key,
                                                   refkac_format format, char** out);

/* tau_m of a partition tuple in CLI syntax; result in the same syntax. */
REFKAC_API refkac_status refkac_tau_m(const char* lambda, unsigned m, char** out);

/* Deterministic dump of P or Q^m (max_level = REFKAC_UNBOUNDED for all
 * levels within the weight bound). */
REFKAC_API refkac_status refkac_series_dump(const refkac_quiver* quiver, refkac_series_kind kind,
                                            unsigned weight, unsigned max_level, char** out);

/* Verification. suite may be NULL or "all". weight = 0 keeps each suite's
 * default bound. */
REFKAC_API refkac_status refkac_suite_names(char** out);
REFKAC_API refkac_status refkac_verify(const char* suite, uint64_t seed, unsigned weight,
                                       refkac_report** out);
REFKAC_API void refkac_report_free(refkac_report* report);
REFKAC_API refkac_status refkac_report_passed(const refkac_report* report, int* out);
REFKAC_API refkac_status refkac_report_render(const refkac_report* report, refkac_format format,
                                              char** out);

#ifdef __cplusplus
}
#endif

#endif /* REFKAC_REFKAC_H */
