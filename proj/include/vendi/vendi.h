/*
 * Copyright 2026 The Vendi Authors
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
 * C interface to the Vendi Score library.
 *
 * Every fallible call returns a vendi_status. On failure the output
 * arguments are left untouched and vendi_last_error() returns a message for
 * the calling thread naming the input (file and line where applicable) and
 * the violated invariant. Handles are opaque, immutable once built (except
 * for the attach calls) and must be released with the matching _destroy
 * function. Input buffers are copied; nothing is retained across calls.
 */

#ifndef VENDI_VENDI_H
#define VENDI_VENDI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(VENDI_BUILDING_LIBRARY)
#    define VENDI_API __declspec(dllexport)
#  else
#    define VENDI_API __declspec(dllimport)
#  endif
#else
#  define VENDI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vendi_status {
  VENDI_OK = 0,
  VENDI_ERR_INVALID_ARGUMENT = 1,
  VENDI_ERR_NON_SQUARE = 2,
  VENDI_ERR_NON_FINITE_ENTRY = 3,
  VENDI_ERR_DIAGONAL_NOT_UNIT = 4,
  VENDI_ERR_ASYMMETRY_EXCEEDS_TOLERANCE = 5,
  VENDI_ERR_ZERO_NORM_ROW = 6,
  VENDI_ERR_DIMENSION_MISMATCH = 7,
  VENDI_ERR_INVALID_WEIGHTS = 8,
  VENDI_ERR_NON_POSITIVE_SIGMA = 9,
  VENDI_ERR_EMPTY_TEXT = 10,
  VENDI_ERR_BIT_LENGTH_MISMATCH = 11,
  VENDI_ERR_EMPTY_FINGERPRINT = 12,
  VENDI_ERR_KIND_MISMATCH = 13,
  VENDI_ERR_NO_NGRAMS_AVAILABLE = 14,
  VENDI_ERR_IO = 15,
  VENDI_ERR_PARSE = 16,
  VENDI_ERR_RAGGED_ROWS = 17,
  VENDI_ERR_NON_FINITE = 18,
  VENDI_ERR_EMPTY_LINE = 19,
  VENDI_ERR_BAD_HEX = 20,
  VENDI_ERR_LENGTH_MISMATCH = 21,
  VENDI_ERR_MISSING_LABELS = 22,
  VENDI_ERR_ZERO_NORM_VECTOR = 23,
  /* Numerical failures. */
  VENDI_ERR_NOT_POSITIVE_SEMIDEFINITE = 100,
  VENDI_ERR_EIGENSOLVER_FAILURE = 101,
  VENDI_ERR_RANK_DEFICIENT_BLOCK = 102,
  VENDI_ERR_SPECTRUM_NOT_NORMALIZED = 103,
  VENDI_ERR_INTERNAL = 999
} vendi_status;

typedef enum vendi_kernel_kind {
  VENDI_KERNEL_COSINE = 0,
  VENDI_KERNEL_RBF = 1,
  VENDI_KERNEL_NGRAM = 2,
  VENDI_KERNEL_TANIMOTO = 3,
  VENDI_KERNEL_PROB_PRODUCT = 4,
  VENDI_KERNEL_PRECOMPUTED = 5
} vendi_kernel_kind;

typedef enum vendi_sample_kind {
  VENDI_SAMPLES_DENSE = 0,
  VENDI_SAMPLES_TEXT = 1,
  VENDI_SAMPLES_FINGERPRINT = 2,
  VENDI_SAMPLES_KERNEL = 3
} vendi_sample_kind;

typedef struct vendi_kernel_spec {
  vendi_kernel_kind kind;
  double rbf_sigma; /* rbf only, > 0 */
  int ngram_max;    /* ngram only, >= 1 */
} vendi_kernel_spec;

typedef struct vendi_score_options {
  size_t nystrom_columns; /* 0 = exact */
  uint64_t seed;
} vendi_score_options;

typedef struct vendi_dataset vendi_dataset;
typedef struct vendi_spectrum vendi_spectrum;
typedef struct vendi_report vendi_report;

/* Borrowed view of one report record; valid while the report lives. */
typedef struct vendi_report_record {
  const char* category;
  size_t n;
  double vendi_score;
  double entropy;
  double intdiv;
  int has_ngram_diversity;
  double ngram_diversity;
  int has_mode_diversity;
  double mode_diversity;
  size_t eigenvalue_count;
  const double* eigenvalues;
} vendi_report_record;

/* -- library ------------------------------------------------------------- */

VENDI_API const char* vendi_version(void);
VENDI_API const char* vendi_last_error(void);
/* Symbolic name of a status, e.g. "NotPositiveSemidefinite". */
VENDI_API const char* vendi_status_name(vendi_status status);
/* Nonzero for numerical failures (PSD, eigensolver, spectrum). */
VENDI_API int vendi_status_is_numerical(vendi_status status);

/* -- kernel specs -------------------------------------------------------- */

/* Defaults: rbf_sigma = 1, ngram_max = 4. */
VENDI_API vendi_kernel_spec vendi_kernel_spec_default(vendi_kernel_kind kind);
VENDI_API vendi_status vendi_kernel_kind_from_name(const char* name,
                                                   vendi_kernel_kind* out);
VENDI_API const char* vendi_kernel_kind_name(vendi_kernel_kind kind);

/* -- datasets ------------------------------------------------------------ */

VENDI_API vendi_status vendi_dataset_load_dense_csv(const char* path, int has_header,
                                                    vendi_dataset** out);
VENDI_API vendi_status vendi_dataset_load_texts(const char* path, int lowercase,
                                                int allow_empty, vendi_dataset** out);
VENDI_API vendi_status vendi_dataset_load_fingerprints(const char* path, size_t bits,
                                                       vendi_dataset** out);
VENDI_API vendi_status vendi_dataset_load_kernel_csv(const char* path,
                                                     vendi_dataset** out);

/* Row-major n x d values. */
VENDI_API vendi_status vendi_dataset_from_dense(const double* values, size_t n,
                                                size_t d, vendi_dataset** out);
/* n NUL-terminated UTF-8 strings, tokenized like vendi_dataset_load_texts. */
VENDI_API vendi_status vendi_dataset_from_texts(const char* const* texts, size_t n,
                                                int lowercase, vendi_dataset** out);
/* Row-major n x n kernel, validated. */
VENDI_API vendi_status vendi_dataset_from_kernel(const double* values, size_t n,
                                                 vendi_dataset** out);

VENDI_API vendi_status vendi_dataset_attach_weights_file(vendi_dataset* dataset,
                                                         const char* path);
VENDI_API vendi_status vendi_dataset_attach_weights(vendi_dataset* dataset,
                                                    const double* weights, size_t n);
VENDI_API vendi_status vendi_dataset_attach_labels_file(vendi_dataset* dataset,
                                                        const char* path);

VENDI_API size_t vendi_dataset_size(const vendi_dataset* dataset);
VENDI_API vendi_sample_kind vendi_dataset_sample_kind(const vendi_dataset* dataset);
/* Items `indices` in order; weights are rescaled, labels carried over. */
VENDI_API vendi_status vendi_dataset_subset(const vendi_dataset* dataset,
                                            const size_t* indices, size_t count,
                                            vendi_dataset** out);
VENDI_API void vendi_dataset_destroy(vendi_dataset* dataset);

/* -- scores -------------------------------------------------------------- */

/* `options` may be NULL (exact). */
VENDI_API vendi_status vendi_score(const vendi_dataset* dataset,
                                   const vendi_kernel_spec* spec,
                                   const vendi_score_options* options,
                                   vendi_spectrum** out);

VENDI_API double vendi_spectrum_score(const vendi_spectrum* spectrum);
VENDI_API double vendi_spectrum_entropy(const vendi_spectrum* spectrum);
VENDI_API size_t vendi_spectrum_sample_count(const vendi_spectrum* spectrum);
/* Number of stored eigenvalues (may be below the sample count). */
VENDI_API size_t vendi_spectrum_eigenvalue_count(const vendi_spectrum* spectrum);
/* Copies up to `capacity` nonincreasing eigenvalues, zero-padded to the
 * sample count; returns the number written. */
VENDI_API size_t vendi_spectrum_eigenvalues(const vendi_spectrum* spectrum,
                                            double* out, size_t capacity);
VENDI_API void vendi_spectrum_destroy(vendi_spectrum* spectrum);

/* Convenience entry points for bindings. */
VENDI_API vendi_status vendi_score_features(const double* values, size_t n, size_t d,
                                            vendi_spectrum** out);
VENDI_API vendi_status vendi_score_kernel(const double* values, size_t n,
                                          vendi_spectrum** out);
VENDI_API vendi_status vendi_score_texts(const char* const* texts, size_t n,
                                         int ngram_max, vendi_spectrum** out);

/* -- baselines ----------------------------------------------------------- */

VENDI_API vendi_status vendi_intdiv(const vendi_dataset* dataset,
                                    const vendi_kernel_spec* spec, double* out);
/* Order-`order` n-gram diversity of a text dataset. */
VENDI_API vendi_status vendi_ngram_diversity(const vendi_dataset* dataset, int order,
                                             double* out);
/* Mean over orders 1..max_order that have at least one n-gram. */
VENDI_API vendi_status vendi_ngram_diversity_mean(const vendi_dataset* dataset,
                                                  int max_order, double* out);
/* Rows of a dense dataset are class distributions. */
VENDI_API vendi_status vendi_mode_diversity(const vendi_dataset* dataset, double* out);

/* -- per-category reports ------------------------------------------------ */

/* Requires labels. `options` may be NULL. */
VENDI_API vendi_status vendi_report_create(const vendi_dataset* dataset,
                                           const vendi_kernel_spec* spec,
                                           const vendi_score_options* options,
                                           vendi_report** out);
VENDI_API size_t vendi_report_record_count(const vendi_report* report);
VENDI_API vendi_status vendi_report_get_record(const vendi_report* report, size_t index,
                                               vendi_report_record* out);
VENDI_API void vendi_report_destroy(vendi_report* report);

#ifdef __cplusplus
}
#endif

#endif /* VENDI_VENDI_H */
