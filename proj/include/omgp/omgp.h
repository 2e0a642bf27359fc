/*
 * Copyright 2026 The libomgp authors
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
 * C interface to libomgp: overlapping mixtures of Gaussian processes for
 * data association and multimodal regression.
 *
 * Conventions:
 *  - Every fallible call returns an omgp_status; OMGP_OK is 0. On failure,
 *    omgp_last_error() describes the most recent error in the calling
 *    thread, and no output parameter is touched.
 *  - Objects are opaque handles created by omgp_* constructors and released
 *    with the matching omgp_*_free (NULL is accepted and ignored).
 *  - Matrices cross the boundary as caller-allocated row-major double
 *    buffers; query the dimensions first.
 */

#ifndef OMGP_OMGP_H
#define OMGP_OMGP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OMGP_API __declspec(dllexport)
#else
#define OMGP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum omgp_status {
  OMGP_OK = 0,
  OMGP_ERROR_INVALID_ARGUMENT = 1, /* bad parameters, shape mismatches */
  OMGP_ERROR_NUMERICAL = 2,        /* factorization or overflow failures */
  OMGP_ERROR_IO = 3,               /* file and parse errors */
  OMGP_ERROR_INTERNAL = 4          /* anything else */
} omgp_status;

typedef struct omgp_scenario omgp_scenario;
typedef struct omgp_config omgp_config;
typedef struct omgp_model omgp_model;
typedef struct omgp_prediction omgp_prediction;

/* Library version as "major.minor.patch". */
OMGP_API const char* omgp_version(void);

/* Message for the calling thread's most recent failure; empty if none. The
 * pointer stays valid until the next failing call on the same thread. */
OMGP_API const char* omgp_last_error(void);

/* ---------------------------------------------------------------- scenarios
 * Seeded generators for the benchmark scenarios; deterministic per seed. */

/* Two sources on a unit circle rotating in opposite directions; 2*samples
 * observations of noisy 2-D positions over time. */
OMGP_API omgp_status omgp_scenario_circles(double num_revolutions, int samples,
                                           double noise_std, uint64_t seed,
                                           omgp_scenario** out);

/* Three constant-velocity 3-D targets observed through range, azimuth, and
 * elevation; num_steps <= 0 means the default of 30 (90 observations).
 * sampling_interval <= 0 means the default of 1 second. */
OMGP_API omgp_status omgp_scenario_missile(int num_steps, double sampling_interval,
                                           uint64_t seed, omgp_scenario** out);

/* Noisy sinc with a seeded fraction of samples replaced by broad uniform
 * outliers. */
OMGP_API omgp_status omgp_scenario_sinc(int samples, double outlier_fraction,
                                        double noise_std, uint64_t seed,
                                        omgp_scenario** out);

/* num_functions offset sinusoids snapshotted at irregular times with seeded
 * per-snapshot dropout. */
OMGP_API omgp_status omgp_scenario_multilevel(int num_functions, int samples,
                                              double noise_std, double dropout,
                                              uint64_t seed, omgp_scenario** out);

/* CSV with in_N, out_N, and label header columns plus an optional JSON
 * sidecar (same stem, .json) carrying the seed and noiseless outputs. */
OMGP_API omgp_status omgp_scenario_load(const char* csv_path, omgp_scenario** out);
OMGP_API omgp_status omgp_scenario_save(const omgp_scenario* scenario,
                                        const char* csv_path);

/* CSV ingestion with explicit zero-based column selections instead of header
 * names; label_col < 0 means no label column. */
OMGP_API omgp_status omgp_scenario_load_columns(const char* csv_path,
                                                const int32_t* input_cols,
                                                int32_t num_input_cols,
                                                const int32_t* output_cols,
                                                int32_t num_output_cols,
                                                int32_t label_col,
                                                omgp_scenario** out);

OMGP_API int64_t omgp_scenario_num_samples(const omgp_scenario* scenario);
OMGP_API int64_t omgp_scenario_input_dim(const omgp_scenario* scenario);
OMGP_API int64_t omgp_scenario_output_dim(const omgp_scenario* scenario);
OMGP_API int omgp_scenario_has_labels(const omgp_scenario* scenario);
OMGP_API int omgp_scenario_has_noiseless(const omgp_scenario* scenario);
OMGP_API const char* omgp_scenario_name(const omgp_scenario* scenario);
OMGP_API uint64_t omgp_scenario_seed(const omgp_scenario* scenario);

/* Buffers: inputs N*P, outputs and noiseless N*D, labels N (row-major). */
OMGP_API omgp_status omgp_scenario_inputs(const omgp_scenario* scenario, double* out);
OMGP_API omgp_status omgp_scenario_outputs(const omgp_scenario* scenario, double* out);
OMGP_API omgp_status omgp_scenario_noiseless(const omgp_scenario* scenario, double* out);
OMGP_API omgp_status omgp_scenario_labels(const omgp_scenario* scenario, int32_t* out);
OMGP_API void omgp_scenario_free(omgp_scenario* scenario);

/* ------------------------------------------------------------------ config
 * Flat key = value configuration; see the config file reference in the
 * README for the key set. Values are validated on set; `auto` placeholders
 * resolve against the data when fitting. */

OMGP_API omgp_status omgp_config_create(omgp_config** out);
OMGP_API omgp_status omgp_config_load(const char* path, omgp_config** out);
OMGP_API omgp_status omgp_config_set(omgp_config* config, const char* key,
                                     const char* value);

/* Copies the stored value into buffer (NUL-terminated). Returns
 * OMGP_ERROR_INVALID_ARGUMENT when the key is unknown or unset. */
OMGP_API omgp_status omgp_config_get(const omgp_config* config, const char* key,
                                     char* buffer, size_t buffer_size);
OMGP_API void omgp_config_free(omgp_config* config);

/* ----------------------------------------------------------------- fitting */

/* Variational EM fit of an overlapping GP mixture. inputs is n x p and
 * outputs n x d, both row-major. */
OMGP_API omgp_status omgp_fit(const double* inputs, const double* outputs, int64_t n,
                              int64_t p, int64_t d, const omgp_config* config,
                              omgp_model** out);
OMGP_API omgp_status omgp_fit_scenario(const omgp_scenario* scenario,
                                       const omgp_config* config, omgp_model** out);

/* Grow a fitted model with a new batch (n x p inputs, n x d outputs) and
 * re-run training warm-started from the previous solution. n == 0 returns a
 * copy of the model. */
OMGP_API omgp_status omgp_fit_online(const omgp_model* model, const double* inputs,
                                     const double* outputs, int64_t n,
                                     omgp_model** out);

/* ------------------------------------------------------------------- model */

OMGP_API int omgp_model_num_components(const omgp_model* model);
OMGP_API int64_t omgp_model_num_samples(const omgp_model* model);
OMGP_API int64_t omgp_model_input_dim(const omgp_model* model);
OMGP_API int64_t omgp_model_output_dim(const omgp_model* model);
OMGP_API int omgp_model_converged(const omgp_model* model);
OMGP_API double omgp_model_final_bound(const omgp_model* model);

/* Responsibilities: N*M row-major. */
OMGP_API omgp_status omgp_model_responsibilities(const omgp_model* model, double* out);

/* Hard assignment per training sample; max_responsibility may be NULL. */
OMGP_API omgp_status omgp_model_associate(const omgp_model* model, int32_t* labels,
                                          double* max_responsibility);

/* Posterior trajectory means at the training inputs for one component, in
 * original output units (centering undone); buffer N*D row-major. */
OMGP_API omgp_status omgp_model_posterior_means(const omgp_model* model, int component,
                                                double* out);

/* Training-bound trace: one (round, value) pair per EM round. */
OMGP_API int64_t omgp_model_bound_trace_length(const omgp_model* model);
OMGP_API omgp_status omgp_model_bound_trace(const omgp_model* model, int32_t* rounds,
                                            double* values);

/* Fitted noise variances: 1 entry (shared) or one per component. */
OMGP_API int omgp_model_noise_count(const omgp_model* model);
OMGP_API omgp_status omgp_model_noise_variances(const omgp_model* model, double* out);

/* Fitted kernel hyperparameters per component, in the kernel's own order. */
OMGP_API int omgp_model_kernel_hyper_count(const omgp_model* model, int component);
OMGP_API omgp_status omgp_model_kernel_hypers(const omgp_model* model, int component,
                                              double* out);
OMGP_API omgp_status omgp_model_kernel_family(const omgp_model* model, int component,
                                              char* buffer, size_t buffer_size);

/* Single-document JSON persistence (config, data, responsibilities, fitted
 * hyperparameters, bound trace). */
OMGP_API omgp_status omgp_model_save(const omgp_model* model, const char* path);
OMGP_API omgp_status omgp_model_load(const char* path, omgp_model** out);

/* CSV with columns row,label,max_responsibility. */
OMGP_API omgp_status omgp_model_save_labels_csv(const omgp_model* model,
                                                const char* path);
OMGP_API void omgp_model_free(omgp_model* model);

/* -------------------------------------------------------------- prediction */

/* Mixture predictive distribution at n x p row-major test inputs. */
OMGP_API omgp_status omgp_predict(const omgp_model* model, const double* test_inputs,
                                  int64_t n, int64_t p, omgp_prediction** out);

/* Reads test inputs from a CSV (in_* header columns when present, otherwise
 * every column) and writes the prediction CSV to out_csv. */
OMGP_API omgp_status omgp_predict_file(const omgp_model* model, const char* test_csv,
                                       const char* out_csv);

OMGP_API int64_t omgp_prediction_num_points(const omgp_prediction* prediction);
OMGP_API int omgp_prediction_num_components(const omgp_prediction* prediction);
OMGP_API int64_t omgp_prediction_output_dim(const omgp_prediction* prediction);

/* Buffers: weights M; means N*D row-major per component; variances N. */
OMGP_API omgp_status omgp_prediction_weights(const omgp_prediction* prediction,
                                             double* out);
OMGP_API omgp_status omgp_prediction_means(const omgp_prediction* prediction,
                                           int component, double* out);
OMGP_API omgp_status omgp_prediction_variances(const omgp_prediction* prediction,
                                               int component, double* out);

/* Mixture density at test point point_index evaluated at y_star (length D). */
OMGP_API omgp_status omgp_prediction_density(const omgp_prediction* prediction,
                                             int64_t point_index, const double* y_star,
                                             double* out);

/* CSV with one row per (test point, component). */
OMGP_API omgp_status omgp_prediction_save_csv(const omgp_prediction* prediction,
                                              const char* path);
OMGP_API void omgp_prediction_free(omgp_prediction* prediction);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* OMGP_OMGP_H */
