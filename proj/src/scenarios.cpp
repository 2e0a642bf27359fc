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

#include "scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "csv.hpp"
#include "json.hpp"
#include "rng.hpp"

namespace omgp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

/// Symmetric PSD square root via eigendecomposition; tiny negative
/// eigenvalues from rounding are clamped to zero.
Eigen::Matrix3d psd_sqrt(const Eigen::Matrix3d& m, const char* what) {
  if ((m - m.transpose()).norm() > 1e-9 * (1.0 + m.norm()))
    throw std::invalid_argument(std::string(what) + ": matrix must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m);
  Eigen::Vector3d eigenvalues = solver.eigenvalues();
  const double scale = 1.0 + eigenvalues.cwiseAbs().maxCoeff();
  for (int i = 0; i < 3; ++i) {
    if (eigenvalues(i) < -1e-9 * scale)
      throw std::invalid_argument(std::string(what) + ": matrix must be positive semidefinite");
    eigenvalues(i) = std::sqrt(std::max(eigenvalues(i), 0.0));
  }
  return solver.eigenvectors() * eigenvalues.asDiagonal() * solver.eigenvectors().transpose();
}

Eigen::Vector3d normal3(RngStream& rng) {
  return {rng.normal(), rng.normal(), rng.normal()};
}

}  // namespace

Eigen::Vector3d range_bearing_elevation(const Eigen::Vector3d& position) {
  const double horizontal = std::sqrt(position.x() * position.x() + position.y() * position.y());
  return {position.norm(), std::atan2(position.y(), position.x()),
          std::atan2(-position.z(), horizontal)};
}

Scenario gen_circles(double num_revolutions, int samples, double noise_std,
                     std::uint64_t seed) {
  require(samples >= 4, "gen_circles: samples must be >= 4");
  require(num_revolutions > 0.0 && std::isfinite(num_revolutions),
          "gen_circles: num_revolutions must be positive");
  require(noise_std >= 0.0 && std::isfinite(noise_std),
          "gen_circles: noise_std must be non-negative");

  const int n = 2 * samples;
  MatrixXd inputs(n, 1), outputs(n, 2), clean(n, 2);
  VectorXi labels(n);
  RngStream rng(seed, 0);

  for (int i = 0; i < samples; ++i) {
    const double t = num_revolutions * static_cast<double>(i) / static_cast<double>(samples);
    const double theta = kTwoPi * t;
    // Counterclockwise and clockwise motion from the shared start (1, 0).
    const double positions[2][2] = {{std::cos(theta), std::sin(theta)},
                                    {std::cos(theta), -std::sin(theta)}};
    for (int source = 0; source < 2; ++source) {
      const int row = 2 * i + source;
      inputs(row, 0) = t;
      clean(row, 0) = positions[source][0];
      clean(row, 1) = positions[source][1];
      outputs(row, 0) = clean(row, 0) + noise_std * rng.normal();
      outputs(row, 1) = clean(row, 1) + noise_std * rng.normal();
      labels(row) = source;
    }
  }

  Scenario scenario;
  scenario.name = "circles";
  scenario.data = DataSet{inputs, outputs, labels};
  scenario.noiseless_outputs = clean;
  scenario.rng_seed = seed;
  return scenario;
}

Scenario gen_missile_to_air(const StateSpaceParams& params, std::uint64_t seed) {
  require(params.sampling_interval > 0.0, "gen_missile_to_air: sampling_interval must be positive");
  require(params.num_steps >= 1, "gen_missile_to_air: num_steps must be >= 1");
  require(!params.initial_states.empty(), "gen_missile_to_air: need at least one initial state");

  const double t_s = params.sampling_interval;
  const Eigen::Matrix3d sqrt_q = psd_sqrt(params.process_noise, "gen_missile_to_air: Q");
  const Eigen::Matrix3d sqrt_r = psd_sqrt(params.measurement_noise, "gen_missile_to_air: R");

  Eigen::Matrix<double, 6, 6> f = Eigen::Matrix<double, 6, 6>::Identity();
  f.topRightCorner<3, 3>() = t_s * Eigen::Matrix3d::Identity();
  Eigen::Matrix<double, 6, 3> g;
  g.topRows<3>() = 0.5 * t_s * t_s * Eigen::Matrix3d::Identity();
  g.bottomRows<3>() = t_s * Eigen::Matrix3d::Identity();

  const int num_sources = static_cast<int>(params.initial_states.size());
  const int n = params.num_steps * num_sources;
  MatrixXd inputs(n, 1), outputs(n, 3), clean(n, 3);
  VectorXi labels(n);
  std::vector<Eigen::Matrix<double, 6, 1>> states = params.initial_states;
  RngStream rng(seed, 0);

  int row = 0;
  for (int step = 0; step < params.num_steps; ++step) {
    const double time = static_cast<double>(step) * t_s;
    for (int source = 0; source < num_sources; ++source) {
      const Eigen::Vector3d position = states[static_cast<size_t>(source)].head<3>();
      if (position.x() == 0.0 && position.y() == 0.0)
        throw NumericalError("gen_missile_to_air: source above the origin, azimuth undefined");
      const Eigen::Vector3d measurement = range_bearing_elevation(position);
      inputs(row, 0) = time;
      clean.row(row) = measurement.transpose();
      outputs.row(row) = (measurement + sqrt_r * normal3(rng)).transpose();
      labels(row) = source;
      ++row;
    }
    for (int source = 0; source < num_sources; ++source) {
      auto& state = states[static_cast<size_t>(source)];
      state = f * state + g * (sqrt_q * normal3(rng));
    }
  }

  Scenario scenario;
  scenario.name = "missile_to_air";
  scenario.data = DataSet{inputs, outputs, labels};
  scenario.noiseless_outputs = clean;
  scenario.rng_seed = seed;
  return scenario;
}

Scenario gen_sinc_outliers(int samples, double outlier_fraction, double noise_std,
                           std::uint64_t seed) {
  require(samples >= 2, "gen_sinc_outliers: samples must be >= 2");
  require(outlier_fraction >= 0.0 && outlier_fraction <= 1.0,
          "gen_sinc_outliers: outlier_fraction must lie in [0, 1]");
  require(noise_std >= 0.0 && std::isfinite(noise_std),
          "gen_sinc_outliers: noise_std must be non-negative");

  MatrixXd inputs(samples, 1), outputs(samples, 1), clean(samples, 1);
  VectorXi labels = VectorXi::Zero(samples);
  RngStream rng(seed, 0);

  for (int i = 0; i < samples; ++i) {
    const double x = -10.0 + 20.0 * static_cast<double>(i) / static_cast<double>(samples - 1);
    inputs(i, 0) = x;
    clean(i, 0) = (x == 0.0) ? 1.0 : std::sin(x) / x;
    outputs(i, 0) = clean(i, 0) + noise_std * rng.normal();
  }

  // Seeded choice of distinct outlier positions (partial Fisher-Yates), then
  // replacement by broad uniform draws.
  const int num_outliers =
      static_cast<int>(std::llround(outlier_fraction * static_cast<double>(samples)));
  std::vector<int> order(static_cast<size_t>(samples));
  std::iota(order.begin(), order.end(), 0);
  for (int k = 0; k < num_outliers; ++k) {
    const int j = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(samples - k)));
    std::swap(order[static_cast<size_t>(k)], order[static_cast<size_t>(j)]);
  }
  for (int k = 0; k < num_outliers; ++k) {
    const int row = order[static_cast<size_t>(k)];
    outputs(row, 0) = rng.uniform(-2.0, 2.0);
    labels(row) = 1;
  }

  Scenario scenario;
  scenario.name = "sinc_outliers";
  scenario.data = DataSet{inputs, outputs, labels};
  scenario.noiseless_outputs = clean;
  scenario.rng_seed = seed;
  return scenario;
}

Scenario gen_multilevel(int num_functions, int samples, double noise_std,
                        std::uint64_t seed, double dropout) {
  require(num_functions >= 1, "gen_multilevel: num_functions must be >= 1");
  require(samples >= 1, "gen_multilevel: samples must be >= 1");
  require(noise_std >= 0.0 && std::isfinite(noise_std),
          "gen_multilevel: noise_std must be non-negative");
  require(dropout >= 0.0 && dropout < 1.0, "gen_multilevel: dropout must lie in [0, 1)");

  RngStream rng(seed, 0);
  std::vector<double> times(static_cast<size_t>(samples));
  for (double& t : times) t = rng.uniform(0.0, 10.0);
  std::sort(times.begin(), times.end());

  std::vector<double> time_rows, value_rows, clean_rows;
  std::vector<int> label_rows;
  for (double t : times) {
    for (int k = 0; k < num_functions; ++k) {
      const bool dropped = rng.uniform() < dropout;
      if (dropped) continue;
      const double dk = static_cast<double>(k);
      const double curve = 3.0 * dk + std::sin((0.6 + 0.25 * dk) * t + 0.8 * dk);
      time_rows.push_back(t);
      clean_rows.push_back(curve);
      value_rows.push_back(curve + noise_std * rng.normal());
      label_rows.push_back(k);
    }
  }
  if (time_rows.empty())
    throw NumericalError("gen_multilevel: every observation was dropped; lower dropout");

  const Eigen::Index n = static_cast<Eigen::Index>(time_rows.size());
  MatrixXd inputs(n, 1), outputs(n, 1), clean(n, 1);
  VectorXi labels(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    inputs(i, 0) = time_rows[static_cast<size_t>(i)];
    outputs(i, 0) = value_rows[static_cast<size_t>(i)];
    clean(i, 0) = clean_rows[static_cast<size_t>(i)];
    labels(i) = label_rows[static_cast<size_t>(i)];
  }

  Scenario scenario;
  scenario.name = "multilevel";
  scenario.data = DataSet{inputs, outputs, labels};
  scenario.noiseless_outputs = clean;
  scenario.rng_seed = seed;
  return scenario;
}

Scenario load_csv(const std::string& path, const std::vector<int>& input_cols,
                  const std::vector<int>& output_cols, std::optional<int> label_col) {
  if (input_cols.empty() || output_cols.empty())
    throw std::invalid_argument("load_csv: need at least one input and one output column");
  const CsvTable table = read_csv_table(path);
  const auto check_col = [&](int c) {
    if (c < 0 || c >= table.values.cols())
      throw std::invalid_argument("load_csv: column index " + std::to_string(c) +
                                  " out of range for '" + path + "' (" +
                                  std::to_string(table.values.cols()) + " columns)");
  };
  for (int c : input_cols) check_col(c);
  for (int c : output_cols) check_col(c);
  if (label_col) check_col(*label_col);

  const Eigen::Index n = table.values.rows();
  Scenario scenario;
  scenario.name = path;
  const size_t slash = path.find_last_of('/');
  if (slash != std::string::npos) scenario.name = path.substr(slash + 1);
  const size_t dot = scenario.name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) scenario.name = scenario.name.substr(0, dot);

  scenario.data.inputs.resize(n, static_cast<Eigen::Index>(input_cols.size()));
  for (size_t j = 0; j < input_cols.size(); ++j)
    scenario.data.inputs.col(static_cast<Eigen::Index>(j)) = table.values.col(input_cols[j]);
  scenario.data.outputs.resize(n, static_cast<Eigen::Index>(output_cols.size()));
  for (size_t j = 0; j < output_cols.size(); ++j)
    scenario.data.outputs.col(static_cast<Eigen::Index>(j)) = table.values.col(output_cols[j]);

  if (label_col) {
    VectorXi labels(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double v = table.values(i, *label_col);
      const long long rounded = std::llround(v);
      if (std::abs(v - static_cast<double>(rounded)) > 1e-9)
        throw IoError(path + ":" + std::to_string(i + 2) + ": label cell " + format_double(v) +
                      " is not an integer");
      labels(i) = static_cast<int>(rounded);
    }
    scenario.data.labels = labels;
  }
  scenario.data.validate();
  return scenario;
}

std::string sidecar_path(const std::string& csv_path) {
  const size_t slash = csv_path.find_last_of('/');
  const size_t dot = csv_path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return csv_path + ".json";
  return csv_path.substr(0, dot) + ".json";
}

void save_scenario(const Scenario& scenario, const std::string& csv_path) {
  scenario.data.validate();
  const Eigen::Index n = scenario.data.num_samples();
  const Eigen::Index p = scenario.data.input_dim();
  const Eigen::Index d = scenario.data.output_dim();

  std::vector<std::string> header;
  MatrixXd values(n, p + d + (scenario.data.labels ? 1 : 0));
  for (Eigen::Index j = 0; j < p; ++j) {
    header.push_back("in_" + std::to_string(j));
    values.col(j) = scenario.data.inputs.col(j);
  }
  for (Eigen::Index j = 0; j < d; ++j) {
    header.push_back("out_" + std::to_string(j));
    values.col(p + j) = scenario.data.outputs.col(j);
  }
  if (scenario.data.labels) {
    header.push_back("label");
    values.col(p + d) = scenario.data.labels->cast<double>();
  }
  write_csv_table(csv_path, header, values);

  nlohmann::json sidecar;
  sidecar["schema"] = 1;
  sidecar["name"] = scenario.name;
  sidecar["rng_seed"] = scenario.rng_seed;
  if (scenario.noiseless_outputs) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < scenario.noiseless_outputs->rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < scenario.noiseless_outputs->cols(); ++j)
        row.push_back((*scenario.noiseless_outputs)(i, j));
      rows.push_back(std::move(row));
    }
    sidecar["noiseless_outputs"] = std::move(rows);
  }
  std::ofstream file(sidecar_path(csv_path));
  if (!file) throw IoError("cannot open '" + sidecar_path(csv_path) + "' for writing");
  file << sidecar.dump(2) << '\n';
}

Scenario load_scenario(const std::string& csv_path) {
  const CsvTable table = read_csv_table(csv_path);
  std::vector<int> input_cols, output_cols;
  std::optional<int> label_col;
  for (size_t c = 0; c < table.header.size(); ++c) {
    const std::string& name = table.header[c];
    if (name.rfind("in_", 0) == 0)
      input_cols.push_back(static_cast<int>(c));
    else if (name.rfind("out_", 0) == 0)
      output_cols.push_back(static_cast<int>(c));
    else if (name == "label")
      label_col = static_cast<int>(c);
  }
  if (input_cols.empty() || output_cols.empty())
    throw IoError(csv_path + ": header must name in_* and out_* columns");
  Scenario scenario = load_csv(csv_path, input_cols, output_cols, label_col);

  std::ifstream sidecar_file(sidecar_path(csv_path));
  if (sidecar_file) {
    nlohmann::json sidecar;
    try {
      sidecar_file >> sidecar;
    } catch (const nlohmann::json::exception& e) {
      throw IoError(sidecar_path(csv_path) + ": " + e.what());
    }
    if (sidecar.contains("name")) scenario.name = sidecar["name"].get<std::string>();
    if (sidecar.contains("rng_seed")) scenario.rng_seed = sidecar["rng_seed"].get<std::uint64_t>();
    if (sidecar.contains("noiseless_outputs") && sidecar["noiseless_outputs"].is_array()) {
      const auto& rows = sidecar["noiseless_outputs"];
      if (rows.size() != static_cast<size_t>(scenario.data.num_samples()))
        throw IoError(sidecar_path(csv_path) + ": noiseless_outputs row count disagrees with CSV");
      MatrixXd clean(scenario.data.num_samples(), scenario.data.output_dim());
      for (Eigen::Index i = 0; i < clean.rows(); ++i) {
        const auto& row = rows[static_cast<size_t>(i)];
        if (row.size() != static_cast<size_t>(clean.cols()))
          throw IoError(sidecar_path(csv_path) + ": noiseless_outputs width disagrees with CSV");
        for (Eigen::Index j = 0; j < clean.cols(); ++j)
          clean(i, j) = row[static_cast<size_t>(j)].get<double>();
      }
      scenario.noiseless_outputs = clean;
    }
  }
  return scenario;
}

}  // namespace omgp
