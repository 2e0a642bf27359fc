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

#include "model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kernels.hpp"

namespace omgp {

namespace {

using nlohmann::json;

json matrix_to_json(const MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixXd matrix_from_json(const json& rows, const char* what) {
  if (!rows.is_array()) throw IoError(std::string(what) + ": expected an array of rows");
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  Eigen::Index cols = -1;
  MatrixXd m;
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array()) throw IoError(std::string(what) + ": expected an array of rows");
    if (cols < 0) {
      cols = static_cast<Eigen::Index>(row.size());
      m.resize(n, cols);
    }
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw IoError(std::string(what) + ": ragged rows");
    for (Eigen::Index j = 0; j < cols; ++j)
      m(i, j) = row[static_cast<size_t>(j)].get<double>();
  }
  if (cols < 0) m.resize(0, 0);
  return m;
}

json vector_to_json(const VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

VectorXd vector_from_json(const json& values, const char* what) {
  if (!values.is_array()) throw IoError(std::string(what) + ": expected an array");
  VectorXd v(static_cast<Eigen::Index>(values.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = values[static_cast<size_t>(i)].get<double>();
  return v;
}

json kernel_to_json(const KernelSpec& spec) {
  json out;
  out["family"] = to_string(spec.family);
  if (spec.family == KernelFamily::SquaredExponentialArd) {
    out["signal_power"] = spec.signal_power;
    out["length_scales"] = json(spec.length_scales);
  } else {
    out["noise_level"] = spec.noise_level;
  }
  return out;
}

KernelSpec kernel_from_json(const json& in) {
  const KernelFamily family = kernel_family_from_string(in.at("family").get<std::string>());
  if (family == KernelFamily::SquaredExponentialArd)
    return KernelSpec::se_ard(in.at("signal_power").get<double>(),
                              in.at("length_scales").get<std::vector<double>>());
  return KernelSpec::white_noise(in.at("noise_level").get<double>());
}

json config_to_json(const OmgpConfig& config) {
  json out;
  out["num_components"] = config.num_components;
  out["noise_variance"] = config.noise_variance;
  out["per_component_noise"] = config.per_component_noise;
  out["standardize_outputs"] = config.standardize_outputs;
  if (!config.component_noise_variances.empty())
    out["component_noise_variances"] = json(config.component_noise_variances);
  out["prior"] = config.prior.is_uniform() ? json("uniform")
                                           : json{{"matrix", matrix_to_json(*config.prior.matrix)}};
  out["max_em_rounds"] = config.max_em_rounds;
  out["num_restarts"] = config.num_restarts;
  out["estep_tol"] = config.estep_tol;
  out["max_inner_iterations"] = config.max_inner_iterations;
  out["mstep"] = {{"max_evals", config.mstep.max_evals},
                  {"gradient_tol", config.mstep.gradient_tol}};
  out["seed"] = config.seed;
  json kernels = json::array();
  for (const KernelSpec& k : config.kernels) kernels.push_back(kernel_to_json(k));
  out["kernels"] = std::move(kernels);
  return out;
}

OmgpConfig config_from_json(const json& in) {
  OmgpConfig config;
  config.num_components = in.at("num_components").get<int>();
  config.noise_variance = in.at("noise_variance").get<double>();
  config.per_component_noise = in.value("per_component_noise", false);
  config.standardize_outputs = in.value("standardize_outputs", false);
  if (in.contains("component_noise_variances"))
    config.component_noise_variances =
        in["component_noise_variances"].get<std::vector<double>>();
  const json& prior = in.at("prior");
  if (prior.is_string()) {
    if (prior.get<std::string>() != "uniform")
      throw IoError("model JSON: unknown prior '" + prior.get<std::string>() + "'");
  } else {
    config.prior.matrix = matrix_from_json(prior.at("matrix"), "prior matrix");
  }
  config.max_em_rounds = in.at("max_em_rounds").get<int>();
  config.num_restarts = in.value("num_restarts", 1);
  config.estep_tol = in.at("estep_tol").get<double>();
  config.max_inner_iterations = in.at("max_inner_iterations").get<int>();
  config.mstep.max_evals = in.at("mstep").at("max_evals").get<int>();
  config.mstep.gradient_tol = in.at("mstep").at("gradient_tol").get<double>();
  config.seed = in.at("seed").get<std::uint64_t>();
  for (const json& k : in.at("kernels")) config.kernels.push_back(kernel_from_json(k));
  return config;
}

}  // namespace

std::string model_to_json(const OmgpModel& model) {
  json out;
  out["schema"] = 1;
  out["config"] = config_to_json(model.config);

  json data;
  data["inputs"] = matrix_to_json(model.data.inputs);
  data["outputs"] = matrix_to_json(model.data.outputs);
  if (model.data.labels) {
    json labels = json::array();
    for (Eigen::Index i = 0; i < model.data.labels->size(); ++i)
      labels.push_back((*model.data.labels)(i));
    data["labels"] = std::move(labels);
  }
  out["data"] = std::move(data);

  out["target_means"] = vector_to_json(model.target_means.transpose());
  out["target_scales"] = vector_to_json(model.target_scales.transpose());
  out["responsibilities"] = matrix_to_json(model.responsibilities.matrix);

  json kernels = json::array();
  for (const KernelSpec& k : model.kernels) kernels.push_back(kernel_to_json(k));
  out["kernels"] = std::move(kernels);
  out["noise_variances"] = vector_to_json(model.noise_variances);

  json trace = json::array();
  for (const auto& [round, value] : model.bound_trace)
    trace.push_back(json::array({round, value}));
  out["bound_trace"] = std::move(trace);
  out["converged"] = model.converged;
  return out.dump(2);
}

OmgpModel model_from_json(const std::string& text, const std::string& origin) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(origin + ": " + e.what());
  }
  try {
    if (in.value("schema", 0) != 1)
      throw IoError(origin + ": unsupported model schema, expected 1");

    OmgpModel model;
    model.config = config_from_json(in.at("config"));
    model.data.inputs = matrix_from_json(in.at("data").at("inputs"), "data.inputs");
    model.data.outputs = matrix_from_json(in.at("data").at("outputs"), "data.outputs");
    if (in.at("data").contains("labels")) {
      const json& labels = in["data"]["labels"];
      VectorXi parsed(static_cast<Eigen::Index>(labels.size()));
      for (Eigen::Index i = 0; i < parsed.size(); ++i)
        parsed(i) = labels[static_cast<size_t>(i)].get<int>();
      model.data.labels = parsed;
    }
    model.target_means = vector_from_json(in.at("target_means"), "target_means").transpose();
    model.target_scales =
        in.contains("target_scales")
            ? vector_from_json(in["target_scales"], "target_scales").transpose().eval()
            : Eigen::RowVectorXd::Ones(model.target_means.size()).eval();
    model.responsibilities.matrix =
        matrix_from_json(in.at("responsibilities"), "responsibilities");
    for (const json& k : in.at("kernels")) model.kernels.push_back(kernel_from_json(k));
    model.noise_variances = vector_from_json(in.at("noise_variances"), "noise_variances");
    for (const json& entry : in.at("bound_trace")) {
      if (!entry.is_array() || entry.size() != 2)
        throw IoError(origin + ": bound_trace entries must be [round, value] pairs");
      model.bound_trace.emplace_back(entry[0].get<int>(), entry[1].get<double>());
    }
    model.converged = in.value("converged", false);

    // Shape checks, then rebuild the posterior at the fitted hyperparameters.
    model.data.validate();
    if (static_cast<int>(model.kernels.size()) != model.config.num_components ||
        model.responsibilities.matrix.rows() != model.data.num_samples() ||
        model.responsibilities.num_components() != model.config.num_components ||
        model.target_means.size() != model.data.output_dim() ||
        model.target_scales.size() != model.data.output_dim())
      throw IoError(origin + ": inconsistent shapes in model JSON");
    model.responsibilities.validate();

    OmgpConfig fitted = model.config;
    fitted.kernels = model.kernels;
    if (model.noise_variances.size() == 1) {
      fitted.noise_variance = model.noise_variances(0);
      fitted.per_component_noise = false;
      fitted.component_noise_variances.clear();
    } else {
      if (model.noise_variances.size() != model.config.num_components)
        throw IoError(origin + ": noise_variances length must be 1 or num_components");
      fitted.per_component_noise = true;
      fitted.component_noise_variances.assign(
          model.noise_variances.data(),
          model.noise_variances.data() + model.noise_variances.size());
    }
    model.posterior = m_step_posterior(model.centered_data(), model.responsibilities, fitted);
    return model;
  } catch (const json::exception& e) {
    throw IoError(origin + ": " + e.what());
  }
}

void save_model(const OmgpModel& model, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << model_to_json(model) << '\n';
  if (!file) throw IoError("write failed for '" + path + "'");
}

OmgpModel load_model(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for reading");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return model_from_json(buffer.str(), path);
}

}  // namespace omgp
