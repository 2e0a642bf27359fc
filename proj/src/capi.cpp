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

#include "omgp/omgp.h"

#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "config.hpp"
#include "csv.hpp"
#include "inference.hpp"
#include "model_io.hpp"
#include "prediction.hpp"
#include "scenarios.hpp"
#include "types.hpp"

struct omgp_scenario {
  omgp::Scenario value;
};
struct omgp_config {
  omgp::FileConfig value;
};
struct omgp_model {
  omgp::OmgpModel value;
};
struct omgp_prediction {
  omgp::MixturePrediction value;
};

namespace {

thread_local std::string g_last_error;

using RowMajorMap =
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>;

omgp_status fail(omgp_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

/// Runs `body`, translating exceptions into status codes. `body` must only
/// touch output parameters once it can no longer throw.
template <typename F>
omgp_status guarded(F&& body) {
  try {
    body();
    return OMGP_OK;
  } catch (const std::invalid_argument& e) {
    return fail(OMGP_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const omgp::NumericalError& e) {
    return fail(OMGP_ERROR_NUMERICAL, e.what());
  } catch (const omgp::IoError& e) {
    return fail(OMGP_ERROR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(OMGP_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(OMGP_ERROR_INTERNAL, "unknown error");
  }
}

omgp_status require(bool condition, const char* message) {
  if (condition) return OMGP_OK;
  return fail(OMGP_ERROR_INVALID_ARGUMENT, message);
}

void copy_row_major(const omgp::MatrixXd& m, double* out) {
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                           Eigen::RowMajor>>(out, m.rows(), m.cols()) = m;
}

omgp_status copy_string(const std::string& s, char* buffer, size_t buffer_size) {
  if (buffer == nullptr || buffer_size == 0)
    return fail(OMGP_ERROR_INVALID_ARGUMENT, "output buffer is null or empty");
  if (s.size() + 1 > buffer_size)
    return fail(OMGP_ERROR_INVALID_ARGUMENT,
                "output buffer too small: need " + std::to_string(s.size() + 1) +
                    " bytes");
  std::memcpy(buffer, s.c_str(), s.size() + 1);
  return OMGP_OK;
}

omgp::OmgpConfig resolve_config(const omgp_config* config, const omgp::DataSet& data) {
  if (config == nullptr) return omgp::FileConfig{}.resolve(data);
  return config->value.resolve(data);
}

omgp::DataSet dataset_from_buffers(const double* inputs, const double* outputs,
                                   int64_t n, int64_t p, int64_t d) {
  if (n < 0 || p <= 0 || d <= 0)
    throw std::invalid_argument("data dimensions must be positive (n may be 0)");
  if (n > 0 && (inputs == nullptr || outputs == nullptr))
    throw std::invalid_argument("inputs/outputs may not be null when n > 0");
  omgp::DataSet data;
  data.inputs = n > 0 ? omgp::MatrixXd(RowMajorMap(inputs, n, p))
                      : omgp::MatrixXd(0, p);
  data.outputs = n > 0 ? omgp::MatrixXd(RowMajorMap(outputs, n, d))
                       : omgp::MatrixXd(0, d);
  data.validate();
  return data;
}

}  // namespace

extern "C" {

const char* omgp_version(void) {
#ifdef OMGP_VERSION_STRING
  return OMGP_VERSION_STRING;
#else
  return "0.0.0";
#endif
}

const char* omgp_last_error(void) { return g_last_error.c_str(); }

/* ---------------------------------------------------------------- scenarios */

omgp_status omgp_scenario_circles(double num_revolutions, int samples,
                                  double noise_std, uint64_t seed,
                                  omgp_scenario** out) {
  if (require(out != nullptr, "out is null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto scenario = omgp::gen_circles(num_revolutions, samples, noise_std, seed);
    *out = new omgp_scenario{std::move(scenario)};
  });
}

omgp_status omgp_scenario_missile(int num_steps, double sampling_interval,
                                  uint64_t seed, omgp_scenario** out) {
  if (require(out != nullptr, "out is null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    omgp::StateSpaceParams params;
    if (num_steps > 0) params.num_steps = num_steps;
    if (sampling_interval > 0) params.sampling_interval = sampling_interval;
    auto scenario = omgp::gen_missile_to_air(params, seed);
    *out = new omgp_scenario{std::move(scenario)};
  });
}

omgp_status omgp_scenario_sinc(int samples, double outlier_fraction,
                               double noise_std, uint64_t seed,
                               omgp_scenario** out) {
  if (require(out != nullptr, "out is null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto scenario = omgp::gen_sinc_outliers(samples, outlier_fraction, noise_std, seed);
    *out = new omgp_scenario{std::move(scenario)};
  });
}

omgp_status omgp_scenario_multilevel(int num_functions, int samples,
                                     double noise_std, double dropout,
                                     uint64_t seed, omgp_scenario** out) {
  if (require(out != nullptr, "out is null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto scenario =
        omgp::gen_multilevel(num_functions, samples, noise_std, seed, dropout);
    *out = new omgp_scenario{std::move(scenario)};
  });
}

omgp_status omgp_scenario_load(const char* csv_path, omgp_scenario** out) {
  if (require(csv_path != nullptr && out != nullptr,
              "csv_path/out may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto scenario = omgp::load_scenario(csv_path);
    *out = new omgp_scenario{std::move(scenario)};
  });
}

omgp_status omgp_scenario_load_columns(const char* csv_path, const int32_t* input_cols,
                                       int32_t num_input_cols,
                                       const int32_t* output_cols,
                                       int32_t num_output_cols, int32_t label_col,
                                       omgp_scenario** out) {
  if (require(csv_path != nullptr && out != nullptr,
              "csv_path/out may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    if (num_input_cols <= 0 || num_output_cols <= 0)
      throw std::invalid_argument("need at least one input and one output column");
    if (input_cols == nullptr || output_cols == nullptr)
      throw std::invalid_argument("column arrays may not be null");
    std::vector<int> in(input_cols, input_cols + num_input_cols);
    std::vector<int> out_cols(output_cols, output_cols + num_output_cols);
    std::optional<int> label;
    if (label_col >= 0) label = label_col;
    auto scenario = omgp::load_csv(csv_path, in, out_cols, label);
    *out = new omgp_scenario{std::move(scenario)};
  });
}

omgp_status omgp_scenario_save(const omgp_scenario* scenario, const char* csv_path) {
  if (require(scenario != nullptr && csv_path != nullptr,
              "scenario/csv_path may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { omgp::save_scenario(scenario->value, csv_path); });
}

int64_t omgp_scenario_num_samples(const omgp_scenario* scenario) {
  return scenario == nullptr ? 0 : scenario->value.data.num_samples();
}

int64_t omgp_scenario_input_dim(const omgp_scenario* scenario) {
  return scenario == nullptr ? 0 : scenario->value.data.input_dim();
}

int64_t omgp_scenario_output_dim(const omgp_scenario* scenario) {
  return scenario == nullptr ? 0 : scenario->value.data.output_dim();
}

int omgp_scenario_has_labels(const omgp_scenario* scenario) {
  return scenario != nullptr && scenario->value.data.labels.has_value() ? 1 : 0;
}

int omgp_scenario_has_noiseless(const omgp_scenario* scenario) {
  return scenario != nullptr && scenario->value.noiseless_outputs.has_value() ? 1 : 0;
}

const char* omgp_scenario_name(const omgp_scenario* scenario) {
  return scenario == nullptr ? "" : scenario->value.name.c_str();
}

uint64_t omgp_scenario_seed(const omgp_scenario* scenario) {
  return scenario == nullptr ? 0 : scenario->value.rng_seed;
}

omgp_status omgp_scenario_inputs(const omgp_scenario* scenario, double* out) {
  if (require(scenario != nullptr && out != nullptr,
              "scenario/out may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { copy_row_major(scenario->value.data.inputs, out); });
}

omgp_status omgp_scenario_outputs(const omgp_scenario* scenario, double* out) {
  if (require(scenario != nullptr && out != nullptr,
              "scenario/out may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { copy_row_major(scenario->value.data.outputs, out); });
}

omgp_status omgp_scenario_noiseless(const omgp_scenario* scenario, double* out) {
  if (require(scenario != nullptr && out != nullptr,
              "scenario/out may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    if (!scenario->value.noiseless_outputs)
      throw std::invalid_argument("scenario carries no noiseless outputs");
    copy_row_major(*scenario->value.noiseless_outputs, out);
  });
}

omgp_status omgp_scenario_labels(const omgp_scenario* scenario, int32_t* out) {
  if (require(scenario != nullptr && out != nullptr,
              "scenario/out may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    if (!scenario->value.data.labels)
      throw std::invalid_argument("scenario carries no labels");
    const auto& labels = *scenario->value.data.labels;
    for (Eigen::Index i = 0; i < labels.size(); ++i)
      out[i] = static_cast<int32_t>(labels(i));
  });
}

void omgp_scenario_free(omgp_scenario* scenario) { delete scenario; }

/* ------------------------------------------------------------------ config */

omgp_status omgp_config_create(omgp_config** out) {
  if (require(out != nullptr, "out is null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new omgp_config{}; });
}

omgp_status omgp_config_load(const char* path, omgp_config** out) {
  if (require(path != nullptr && out != nullptr, "path/out may not be null") !=
      OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto config = omgp::FileConfig::load(path);
    *out = new omgp_config{std::move(config)};
  });
}

omgp_status omgp_config_set(omgp_config* config, const char* key, const char* value) {
  if (require(config != nullptr && key != nullptr && value != nullptr,
              "config/key/value may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { config->value.set(key, value); });
}

omgp_status omgp_config_get(const omgp_config* config, const char* key, char* buffer,
                            size_t buffer_size) {
  if (require(config != nullptr && key != nullptr, "config/key may not be null") !=
      OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  auto value = config->value.get(key);
  if (!value)
    return fail(OMGP_ERROR_INVALID_ARGUMENT,
                std::string("no value stored for key: ") + key);
  return copy_string(*value, buffer, buffer_size);
}

void omgp_config_free(omgp_config* config) { delete config; }

/* ----------------------------------------------------------------- fitting */

omgp_status omgp_fit(const double* inputs, const double* outputs, int64_t n,
                     int64_t p, int64_t d, const omgp_config* config,
                     omgp_model** out) {
  if (require(out != nullptr, "out is null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto data = dataset_from_buffers(inputs, outputs, n, p, d);
    auto resolved = resolve_config(config, data);
    auto model = omgp::fit(data, resolved);
    *out = new omgp_model{std::move(model)};
  });
}

omgp_status omgp_fit_scenario(const omgp_scenario* scenario, const omgp_config* config,
                              omgp_model** out) {
  if (require(scenario != nullptr && out != nullptr,
              "scenario/out may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto resolved = resolve_config(config, scenario->value.data);
    auto model = omgp::fit(scenario->value.data, resolved);
    *out = new omgp_model{std::move(model)};
  });
}

omgp_status omgp_fit_online(const omgp_model* model, const double* inputs,
                            const double* outputs, int64_t n, omgp_model** out) {
  if (require(model != nullptr && out != nullptr, "model/out may not be null") !=
      OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto batch = dataset_from_buffers(inputs, outputs, n, model->value.data.input_dim(),
                                      model->value.data.output_dim());
    auto next = omgp::fit_online(model->value, batch);
    *out = new omgp_model{std::move(next)};
  });
}

/* ------------------------------------------------------------------- model */

int omgp_model_num_components(const omgp_model* model) {
  return model == nullptr ? 0 : model->value.num_components();
}

int64_t omgp_model_num_samples(const omgp_model* model) {
  return model == nullptr ? 0 : model->value.data.num_samples();
}

int64_t omgp_model_input_dim(const omgp_model* model) {
  return model == nullptr ? 0 : model->value.data.input_dim();
}

int64_t omgp_model_output_dim(const omgp_model* model) {
  return model == nullptr ? 0 : model->value.data.output_dim();
}

int omgp_model_converged(const omgp_model* model) {
  return model != nullptr && model->value.converged ? 1 : 0;
}

double omgp_model_final_bound(const omgp_model* model) {
  return model == nullptr ? 0.0 : model->value.final_bound();
}

omgp_status omgp_model_responsibilities(const omgp_model* model, double* out) {
  if (require(model != nullptr && out != nullptr, "model/out may not be null") !=
      OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { copy_row_major(model->value.responsibilities.matrix, out); });
}

omgp_status omgp_model_associate(const omgp_model* model, int32_t* labels,
                                 double* max_responsibility) {
  if (require(model != nullptr && labels != nullptr,
              "model/labels may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto assignment = omgp::associate(model->value);
    const auto& resp = model->value.responsibilities.matrix;
    for (Eigen::Index i = 0; i < assignment.size(); ++i) {
      labels[i] = static_cast<int32_t>(assignment(i));
      if (max_responsibility != nullptr)
        max_responsibility[i] = resp(i, assignment(i));
    }
  });
}

omgp_status omgp_model_posterior_means(const omgp_model* model, int component,
                                       double* out) {
  if (require(model != nullptr && out != nullptr, "model/out may not be null") !=
      OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    if (component < 0 || component >= model->value.num_components())
      throw std::invalid_argument("component index out of range");
    omgp::MatrixXd means =
        model->value.posterior.components[static_cast<size_t>(component)].mean;
    if (model->value.target_scales.size() == means.cols())
      means.array().rowwise() *= model->value.target_scales.array();
    means.rowwise() += model->value.target_means;
    copy_row_major(means, out);
  });
}

int64_t omgp_model_bound_trace_length(const omgp_model* model) {
  return model == nullptr ? 0
                          : static_cast<int64_t>(model->value.bound_trace.size());
}

omgp_status omgp_model_bound_trace(const omgp_model* model, int32_t* rounds,
                                   double* values) {
  if (require(model != nullptr && rounds != nullptr && values != nullptr,
              "model/rounds/values may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    for (size_t i = 0; i < model->value.bound_trace.size(); ++i) {
      rounds[i] = static_cast<int32_t>(model->value.bound_trace[i].first);
      values[i] = model->value.bound_trace[i].second;
    }
  });
}

int omgp_model_noise_count(const omgp_model* model) {
  return model == nullptr ? 0 : static_cast<int>(model->value.noise_variances.size());
}

omgp_status omgp_model_noise_variances(const omgp_model* model, double* out) {
  if (require(model != nullptr && out != nullptr, "model/out may not be null") !=
      OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    for (Eigen::Index i = 0; i < model->value.noise_variances.size(); ++i)
      out[i] = model->value.noise_variances(i);
  });
}

int omgp_model_kernel_hyper_count(const omgp_model* model, int component) {
  if (model == nullptr || component < 0 || component >= model->value.num_components())
    return 0;
  return model->value.kernels[static_cast<size_t>(component)].num_hyperparameters();
}

omgp_status omgp_model_kernel_hypers(const omgp_model* model, int component,
                                     double* out) {
  if (require(model != nullptr && out != nullptr, "model/out may not be null") !=
      OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    if (component < 0 || component >= model->value.num_components())
      throw std::invalid_argument("component index out of range");
    auto values =
        model->value.kernels[static_cast<size_t>(component)].hyperparameters();
    for (size_t i = 0; i < values.size(); ++i) out[i] = values[i];
  });
}

omgp_status omgp_model_kernel_family(const omgp_model* model, int component,
                                     char* buffer, size_t buffer_size) {
  if (require(model != nullptr, "model is null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  if (component < 0 || component >= model->value.num_components())
    return fail(OMGP_ERROR_INVALID_ARGUMENT, "component index out of range");
  return copy_string(
      omgp::to_string(model->value.kernels[static_cast<size_t>(component)].family),
      buffer, buffer_size);
}

omgp_status omgp_model_save(const omgp_model* model, const char* path) {
  if (require(model != nullptr && path != nullptr, "model/path may not be null") !=
      OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { omgp::save_model(model->value, path); });
}

omgp_status omgp_model_load(const char* path, omgp_model** out) {
  if (require(path != nullptr && out != nullptr, "path/out may not be null") !=
      OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto model = omgp::load_model(path);
    *out = new omgp_model{std::move(model)};
  });
}

omgp_status omgp_model_save_labels_csv(const omgp_model* model, const char* path) {
  if (require(model != nullptr && path != nullptr, "model/path may not be null") !=
      OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { omgp::save_labels_csv(model->value, path); });
}

void omgp_model_free(omgp_model* model) { delete model; }

/* -------------------------------------------------------------- prediction */

omgp_status omgp_predict(const omgp_model* model, const double* test_inputs, int64_t n,
                         int64_t p, omgp_prediction** out) {
  if (require(model != nullptr && out != nullptr, "model/out may not be null") !=
      OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    if (n < 0 || p <= 0) throw std::invalid_argument("bad test input dimensions");
    if (n > 0 && test_inputs == nullptr)
      throw std::invalid_argument("test_inputs may not be null when n > 0");
    omgp::MatrixXd inputs =
        n > 0 ? omgp::MatrixXd(RowMajorMap(test_inputs, n, p)) : omgp::MatrixXd(0, p);
    auto prediction = omgp::predict(model->value, inputs);
    *out = new omgp_prediction{std::move(prediction)};
  });
}

omgp_status omgp_predict_file(const omgp_model* model, const char* test_csv,
                              const char* out_csv) {
  if (require(model != nullptr && test_csv != nullptr && out_csv != nullptr,
              "model/test_csv/out_csv may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto table = omgp::read_csv_table(test_csv);
    std::vector<int> input_cols;
    for (size_t j = 0; j < table.header.size(); ++j)
      if (table.header[j].rfind("in_", 0) == 0) input_cols.push_back(static_cast<int>(j));
    omgp::MatrixXd inputs;
    if (input_cols.empty()) {
      inputs = table.values;
    } else {
      inputs.resize(table.values.rows(), static_cast<Eigen::Index>(input_cols.size()));
      for (size_t j = 0; j < input_cols.size(); ++j)
        inputs.col(static_cast<Eigen::Index>(j)) = table.values.col(input_cols[j]);
    }
    auto prediction = omgp::predict(model->value, inputs);
    omgp::save_prediction_csv(prediction, out_csv);
  });
}

int64_t omgp_prediction_num_points(const omgp_prediction* prediction) {
  return prediction == nullptr ? 0 : prediction->value.num_points();
}

int omgp_prediction_num_components(const omgp_prediction* prediction) {
  return prediction == nullptr ? 0 : prediction->value.num_components();
}

int64_t omgp_prediction_output_dim(const omgp_prediction* prediction) {
  return prediction == nullptr ? 0 : prediction->value.output_dim();
}

omgp_status omgp_prediction_weights(const omgp_prediction* prediction, double* out) {
  if (require(prediction != nullptr && out != nullptr,
              "prediction/out may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    for (Eigen::Index i = 0; i < prediction->value.component_weights.size(); ++i)
      out[i] = prediction->value.component_weights(i);
  });
}

omgp_status omgp_prediction_means(const omgp_prediction* prediction, int component,
                                  double* out) {
  if (require(prediction != nullptr && out != nullptr,
              "prediction/out may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    if (component < 0 || component >= prediction->value.num_components())
      throw std::invalid_argument("component index out of range");
    copy_row_major(prediction->value.means[static_cast<size_t>(component)], out);
  });
}

omgp_status omgp_prediction_variances(const omgp_prediction* prediction, int component,
                                      double* out) {
  if (require(prediction != nullptr && out != nullptr,
              "prediction/out may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    if (component < 0 || component >= prediction->value.num_components())
      throw std::invalid_argument("component index out of range");
    const auto& variances = prediction->value.variances[static_cast<size_t>(component)];
    for (Eigen::Index i = 0; i < variances.size(); ++i) out[i] = variances(i);
  });
}

omgp_status omgp_prediction_density(const omgp_prediction* prediction,
                                    int64_t point_index, const double* y_star,
                                    double* out) {
  if (require(prediction != nullptr && y_star != nullptr && out != nullptr,
              "prediction/y_star/out may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto d = prediction->value.output_dim();
    omgp::VectorXd y = Eigen::Map<const omgp::VectorXd>(y_star, d);
    *out = omgp::predictive_density(prediction->value, y, point_index);
  });
}

omgp_status omgp_prediction_save_csv(const omgp_prediction* prediction,
                                     const char* path) {
  if (require(prediction != nullptr && path != nullptr,
              "prediction/path may not be null") != OMGP_OK)
    return OMGP_ERROR_INVALID_ARGUMENT;
  return guarded([&] { omgp::save_prediction_csv(prediction->value, path); });
}

void omgp_prediction_free(omgp_prediction* prediction) { delete prediction; }

} /* extern "C" */
