// Copyright 2026 The qent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the qent library. All objects are opaque handles owned by
 * the caller and released with the matching destroy function. Functions that
 * can fail return a qent_status; on failure qent_last_error() describes the
 * problem for the calling thread. */

#ifndef QENT_QENT_H_
#define QENT_QENT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(QENT_BUILDING_LIBRARY)
#define QENT_API __declspec(dllexport)
#else
#define QENT_API __declspec(dllimport)
#endif
#else
#define QENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qent_status {
  QENT_OK = 0,
  QENT_ERR_DOMAIN = 1,      /* argument outside its mathematical domain */
  QENT_ERR_CONVERGENCE = 2, /* root finder, quadrature or search gave up */
  QENT_ERR_ARGUMENT = 3,    /* null pointer, unknown name, bad index */
  QENT_ERR_INTERNAL = 4
} qent_status;

typedef enum qent_cell_kind {
  QENT_CELL_EMPTY = 0,
  QENT_CELL_INT = 1,
  QENT_CELL_REAL = 2,
  QENT_CELL_TEXT = 3
} qent_cell_kind;

typedef enum qent_side { QENT_A_GIVEN_B = 0, QENT_B_GIVEN_A = 1 } qent_side;
typedef enum qent_family { QENT_RENYI = 0, QENT_TSALLIS = 1 } qent_family;

typedef struct qent_rng qent_rng;
typedef struct qent_state qent_state;
typedef struct qent_table qent_table;

QENT_API const char* qent_version(void);
/* Message for the last failure on this thread; empty if none. */
QENT_API const char* qent_last_error(void);

/* ---- random streams ---- */
QENT_API qent_status qent_rng_create(uint64_t seed, uint64_t stream, qent_rng** out);
QENT_API void qent_rng_destroy(qent_rng* rng);

/* ---- states ----
 * Matrices are row-major with separate real and imaginary arrays of
 * dim*dim entries. dims lists the tensor factors, first factor slowest. */
QENT_API qent_status qent_state_from_matrix(const int* dims, size_t n_dims, const double* re, const double* im,
                                            qent_state** out);
/* measure: "lebesgue", "dirichlet:ETA", "bures" or "hs". */
QENT_API qent_status qent_state_sample_mixed(const int* dims, size_t n_dims, const char* measure, qent_rng* rng,
                                             qent_state** out);
QENT_API qent_status qent_state_sample_pure(const int* dims, size_t n_dims, qent_rng* rng, qent_state** out);
/* r_target in [1, 4]; two qubits. */
QENT_API qent_status qent_state_sample_fixed_r(double r_target, qent_rng* rng, qent_state** out);
QENT_API qent_status qent_state_werner(double x, qent_state** out);
QENT_API void qent_state_destroy(qent_state* state);

QENT_API qent_status qent_state_dim(const qent_state* state, size_t* dim);
QENT_API qent_status qent_state_matrix(const qent_state* state, double* re, double* im);

/* ---- criteria and measures ---- */
QENT_API qent_status qent_ppt(const qent_state* state, int* pass, double* min_eig);
QENT_API qent_status qent_reduction(const qent_state* state, int* pass, double* min_eig);
QENT_API qent_status qent_majorization(const qent_state* state, int* pass);
/* q: a positive number or "inf". */
QENT_API qent_status qent_q_entropic(const qent_state* state, const char* q, int* pass);
QENT_API qent_status qent_concurrence(const qent_state* state, double* out);
QENT_API qent_status qent_eof(const qent_state* state, double* out);
QENT_API qent_status qent_purity(const qent_state* state, double* out);
QENT_API qent_status qent_participation_ratio(const qent_state* state, double* out);
QENT_API qent_status qent_lambda_max(const qent_state* state, double* out);
QENT_API qent_status qent_renyi(const qent_state* state, const char* q, double* out);
QENT_API qent_status qent_tsallis(const qent_state* state, const char* q, double* out);
QENT_API qent_status qent_conditional_q(const qent_state* state, const char* q, qent_side side, qent_family family,
                                        double* out);
QENT_API qent_status qent_fidelity(const qent_state* a, const qent_state* b, double* out);
QENT_API qent_status qent_bures_distance(const qent_state* a, const qent_state* b, double* out);
QENT_API qent_status qent_hs_distance(const qent_state* a, const qent_state* b, double* out);

/* ---- surveys ---- */
QENT_API size_t qent_survey_count(void);
QENT_API const char* qent_survey_name(size_t index);
/* Parameter keys accepted by a survey; NULL past the end or for unknown names. */
QENT_API const char* qent_survey_param(const char* survey, size_t index);
QENT_API qent_status qent_survey_run(const char* survey, const char* const* keys, const char* const* values,
                                     size_t n_params, qent_table** out);

QENT_API size_t qent_table_columns(const qent_table* table);
QENT_API size_t qent_table_rows(const qent_table* table);
QENT_API const char* qent_table_column_name(const qent_table* table, size_t col);
QENT_API qent_cell_kind qent_table_cell_kind(const qent_table* table, size_t row, size_t col);
QENT_API qent_status qent_table_cell_int(const qent_table* table, size_t row, size_t col, long long* out);
QENT_API qent_status qent_table_cell_real(const qent_table* table, size_t row, size_t col, double* out);
/* Borrowed pointer valid until the table is destroyed. */
QENT_API const char* qent_table_cell_text(const qent_table* table, size_t row, size_t col);
QENT_API void qent_table_destroy(qent_table* table);

#ifdef __cplusplus
}
#endif

#endif /* QENT_QENT_H_ */
