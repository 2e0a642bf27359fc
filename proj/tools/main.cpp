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

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eval.hpp"
#include "json.hpp"
#include "omgp/omgp.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct ScenarioDeleter {
  void operator()(omgp_scenario* p) const { omgp_scenario_free(p); }
};
struct ConfigDeleter {
  void operator()(omgp_config* p) const { omgp_config_free(p); }
};
struct ModelDeleter {
  void operator()(omgp_model* p) const { omgp_model_free(p); }
};
using ScenarioPtr = std::unique_ptr<omgp_scenario, ScenarioDeleter>;
using ConfigPtr = std::unique_ptr<omgp_config, ConfigDeleter>;
using ModelPtr = std::unique_ptr<omgp_model, ModelDeleter>;

void check(omgp_status status, const std::string& context) {
  if (status == OMGP_OK) return;
  throw std::runtime_error(context + ": " + omgp_last_error());
}

/* ------------------------------------------------------------- scenarios */

struct ScenarioOpts {
  std::string scenario;
  std::uint64_t seed = 0;
  int samples = 50;
  double noise = 0.05;
  double revolutions = 1.0;
  int steps = 30;
  double interval = 1.0;
  double outlier_fraction = 0.1;
  int functions = 3;
  double dropout = 0.2;
};

void add_scenario_options(CLI::App* cmd, ScenarioOpts& opts,
                          const std::vector<std::string>& names) {
  cmd->add_option("--scenario", opts.scenario, "Scenario family")
      ->required()
      ->check(CLI::IsMember(names));
  cmd->add_option("--seed", opts.seed, "Generator seed")->capture_default_str();
  cmd->add_option("--samples", opts.samples,
                  "Time instants (circles) or grid points (sinc, multilevel)")
      ->capture_default_str();
  cmd->add_option("--noise", opts.noise, "Observation noise std deviation")
      ->capture_default_str();
  cmd->add_option("--revolutions", opts.revolutions, "circles: revolutions spanned")
      ->capture_default_str();
  cmd->add_option("--steps", opts.steps, "missile: number of time steps")
      ->capture_default_str();
  cmd->add_option("--interval", opts.interval, "missile: sampling interval (s)")
      ->capture_default_str();
  cmd->add_option("--outlier-fraction", opts.outlier_fraction,
                  "sinc: fraction of samples replaced by outliers")
      ->capture_default_str();
  cmd->add_option("--functions", opts.functions, "multilevel: number of functions")
      ->capture_default_str();
  cmd->add_option("--dropout", opts.dropout,
                  "multilevel: per-snapshot dropout probability")
      ->capture_default_str();
}

ScenarioPtr make_scenario(const ScenarioOpts& opts) {
  omgp_scenario* raw = nullptr;
  if (opts.scenario == "circles") {
    check(omgp_scenario_circles(opts.revolutions, opts.samples, opts.noise, opts.seed,
                                &raw),
          "simulate circles");
  } else if (opts.scenario == "missile") {
    check(omgp_scenario_missile(opts.steps, opts.interval, opts.seed, &raw),
          "simulate missile");
  } else if (opts.scenario == "sinc") {
    check(omgp_scenario_sinc(opts.samples, opts.outlier_fraction, opts.noise,
                             opts.seed, &raw),
          "simulate sinc");
  } else if (opts.scenario == "multilevel") {
    check(omgp_scenario_multilevel(opts.functions, opts.samples, opts.noise,
                                   opts.dropout, opts.seed, &raw),
          "simulate multilevel");
  } else {
    throw std::runtime_error("unknown scenario: " + opts.scenario);
  }
  return ScenarioPtr(raw);
}

std::vector<double> scenario_inputs(const omgp_scenario* s) {
  std::vector<double> v(static_cast<size_t>(omgp_scenario_num_samples(s) *
                                            omgp_scenario_input_dim(s)));
  check(omgp_scenario_inputs(s, v.data()), "read scenario inputs");
  return v;
}

std::vector<double> scenario_outputs(const omgp_scenario* s) {
  std::vector<double> v(static_cast<size_t>(omgp_scenario_num_samples(s) *
                                            omgp_scenario_output_dim(s)));
  check(omgp_scenario_outputs(s, v.data()), "read scenario outputs");
  return v;
}

std::vector<double> scenario_noiseless(const omgp_scenario* s) {
  std::vector<double> v(static_cast<size_t>(omgp_scenario_num_samples(s) *
                                            omgp_scenario_output_dim(s)));
  check(omgp_scenario_noiseless(s, v.data()), "read scenario noiseless outputs");
  return v;
}

std::vector<int> scenario_labels(const omgp_scenario* s) {
  std::vector<int32_t> raw(static_cast<size_t>(omgp_scenario_num_samples(s)));
  check(omgp_scenario_labels(s, raw.data()), "read scenario labels");
  return {raw.begin(), raw.end()};
}

/* ---------------------------------------------------------------- config */

std::optional<std::string> config_value(const omgp_config* cfg, const std::string& key) {
  char buffer[512];
  if (omgp_config_get(cfg, key.c_str(), buffer, sizeof buffer) != OMGP_OK) return {};
  return std::string(buffer);
}

void apply_set(omgp_config* cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw std::runtime_error("--set expects key=value, got: " + assignment);
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  const std::string key = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  check(omgp_config_set(cfg, key.c_str(), value.c_str()), "--set " + key);
}

ConfigPtr build_config(const std::string& config_path,
                       const std::vector<std::string>& sets) {
  omgp_config* raw = nullptr;
  if (config_path.empty())
    check(omgp_config_create(&raw), "create config");
  else
    check(omgp_config_load(config_path.c_str(), &raw), "load config");
  ConfigPtr cfg(raw);
  for (const auto& assignment : sets) apply_set(cfg.get(), assignment);
  return cfg;
}

std::vector<int32_t> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int32_t> values;
  std::stringstream stream(text);
  std::string cell;
  while (std::getline(stream, cell, ',')) {
    try {
      values.push_back(std::stoi(cell));
    } catch (const std::exception&) {
      throw std::runtime_error(what + ": bad integer list entry: " + cell);
    }
  }
  if (values.empty()) throw std::runtime_error(what + ": empty integer list");
  return values;
}

/// Loads a data CSV honoring any data.input_cols/output_cols/label_col hints
/// in the config; without hints the file's in_N/out_N/label header names
/// drive the split.
ScenarioPtr load_data(const std::string& path, const omgp_config* cfg) {
  omgp_scenario* raw = nullptr;
  const auto in_cols = cfg ? config_value(cfg, "data.input_cols") : std::nullopt;
  const auto out_cols = cfg ? config_value(cfg, "data.output_cols") : std::nullopt;
  if (in_cols && out_cols) {
    const auto inputs = parse_int_list(*in_cols, "data.input_cols");
    const auto outputs = parse_int_list(*out_cols, "data.output_cols");
    int32_t label_col = -1;
    if (const auto label = cfg ? config_value(cfg, "data.label_col") : std::nullopt)
      label_col = parse_int_list(*label, "data.label_col").at(0);
    check(omgp_scenario_load_columns(path.c_str(), inputs.data(),
                                     static_cast<int32_t>(inputs.size()),
                                     outputs.data(),
                                     static_cast<int32_t>(outputs.size()), label_col,
                                     &raw),
          "load " + path);
  } else if (in_cols || out_cols) {
    throw std::runtime_error(
        "data.input_cols and data.output_cols must be given together");
  } else {
    check(omgp_scenario_load(path.c_str(), &raw), "load " + path);
  }
  return ScenarioPtr(raw);
}

/* ----------------------------------------------------------------- model */

ModelPtr load_model(const std::string& path) {
  omgp_model* raw = nullptr;
  check(omgp_model_load(path.c_str(), &raw), "load model " + path);
  return ModelPtr(raw);
}

std::vector<int> model_labels(const omgp_model* model) {
  std::vector<int32_t> raw(static_cast<size_t>(omgp_model_num_samples(model)));
  check(omgp_model_associate(model, raw.data(), nullptr), "associate");
  return {raw.begin(), raw.end()};
}

std::vector<std::vector<double>> model_means(const omgp_model* model) {
  const int m = omgp_model_num_components(model);
  const auto n = omgp_model_num_samples(model);
  const auto d = omgp_model_output_dim(model);
  std::vector<std::vector<double>> means(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    means[static_cast<size_t>(k)].resize(static_cast<size_t>(n * d));
    check(omgp_model_posterior_means(model, k, means[static_cast<size_t>(k)].data()),
          "posterior means");
  }
  return means;
}

/* ------------------------------------------------------------------ misc */

std::vector<std::string> split_csv_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> cells;
  std::stringstream stream(line);
  std::string cell;
  while (std::getline(stream, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

/// Reads the `label` column of a CSV written by `associate` (any CSV with a
/// header naming a `label` column works).
std::vector<int> read_label_column(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open labels file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty labels file: " + path);
  const auto header = split_csv_line(line);
  size_t column = header.size();
  for (size_t j = 0; j < header.size(); ++j)
    if (header[j] == "label") column = j;
  if (column == header.size())
    throw std::runtime_error(path + ": no `label` column in header");
  std::vector<int> labels;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (cells.size() <= column)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": row too short for label column");
    try {
      labels.push_back(std::stoi(cells[column]));
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": bad label value: " + cells[column]);
    }
  }
  return labels;
}

json report_to_json(const omgp_cli::EvalReport& report, bool include_wall_time) {
  json j;
  j["n_err"] = report.n_err;
  j["total"] = report.total;
  j["aligning_permutation"] = report.aligning_permutation;
  if (!report.per_track_rmse.empty()) {
    j["per_track_rmse"] = report.per_track_rmse;
    j["rmse_reference"] = report.rmse_reference;
  }
  j["final_bound"] = report.final_bound;
  if (include_wall_time) j["wall_time_seconds"] = report.wall_time_seconds;
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  if (fs::path(path).has_parent_path())
    fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::string format_compact(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%g", value);
  return buffer;
}

/* ------------------------------------------------------------- commands */

void run_simulate(const ScenarioOpts& opts, const std::string& out_arg) {
  auto scenario = make_scenario(opts);
  fs::path out(out_arg);
  const bool as_directory = !out_arg.empty() && (out_arg.back() == '/' ||
                                                 fs::is_directory(out));
  if (as_directory) {
    fs::create_directories(out);
    out /= std::string(omgp_scenario_name(scenario.get())) + ".csv";
  } else if (out.has_parent_path()) {
    fs::create_directories(out.parent_path());
  }
  check(omgp_scenario_save(scenario.get(), out.string().c_str()),
        "save " + out.string());
  std::cout << "wrote " << out.string() << " ("
            << omgp_scenario_num_samples(scenario.get()) << " samples, seed "
            << opts.seed << ")\n";
}

struct FitOpts {
  std::string data;
  std::string config_path;
  std::string out;
  std::vector<std::string> sets;
};

void run_fit(const FitOpts& opts) {
  auto cfg = build_config(opts.config_path, opts.sets);
  auto scenario = load_data(opts.data, cfg.get());
  omgp_model* raw = nullptr;
  check(omgp_fit_scenario(scenario.get(), cfg.get(), &raw), "fit");
  ModelPtr model(raw);
  if (fs::path(opts.out).has_parent_path())
    fs::create_directories(fs::path(opts.out).parent_path());
  check(omgp_model_save(model.get(), opts.out.c_str()), "save model " + opts.out);
  std::cout << "fit: " << omgp_model_num_samples(model.get()) << " samples, "
            << omgp_model_num_components(model.get()) << " components, bound "
            << format_compact(omgp_model_final_bound(model.get())) << ", "
            << omgp_model_bound_trace_length(model.get()) << " rounds, "
            << (omgp_model_converged(model.get()) ? "converged" : "round cap hit")
            << "; wrote " << opts.out << "\n";
}

void run_associate(const std::string& model_path, const std::string& out) {
  auto model = load_model(model_path);
  if (fs::path(out).has_parent_path())
    fs::create_directories(fs::path(out).parent_path());
  check(omgp_model_save_labels_csv(model.get(), out.c_str()), "save labels " + out);
  std::cout << "wrote " << out << " (" << omgp_model_num_samples(model.get())
            << " rows)\n";
}

void run_predict(const std::string& model_path, const std::string& test_csv,
                 const std::string& out) {
  auto model = load_model(model_path);
  if (fs::path(out).has_parent_path())
    fs::create_directories(fs::path(out).parent_path());
  check(omgp_predict_file(model.get(), test_csv.c_str(), out.c_str()), "predict");
  std::cout << "wrote " << out << "\n";
}

struct EvalOpts {
  std::string labels_path;
  std::string scenario_path;
  std::string model_path;
  std::string out;
};

void run_eval(const EvalOpts& opts) {
  const auto started = std::chrono::steady_clock::now();
  omgp_scenario* raw = nullptr;
  check(omgp_scenario_load(opts.scenario_path.c_str(), &raw),
        "load " + opts.scenario_path);
  ScenarioPtr scenario(raw);
  if (!omgp_scenario_has_labels(scenario.get()))
    throw std::runtime_error(opts.scenario_path + ": scenario has no true labels");

  const auto truth = scenario_labels(scenario.get());
  const auto predicted = read_label_column(opts.labels_path);
  if (predicted.size() != truth.size())
    throw std::runtime_error("label count (" + std::to_string(predicted.size()) +
                             ") does not match scenario rows (" +
                             std::to_string(truth.size()) + ")");

  ModelPtr model;
  if (!opts.model_path.empty()) model = load_model(opts.model_path);

  int num_components = 0;
  for (const int label : truth) num_components = std::max(num_components, label + 1);
  for (const int label : predicted)
    num_components = std::max(num_components, label + 1);
  if (model) num_components = std::max(num_components,
                                       omgp_model_num_components(model.get()));

  std::vector<std::vector<double>> means;
  if (model) means = model_means(model.get());
  const bool has_noiseless = omgp_scenario_has_noiseless(scenario.get()) != 0;
  const auto reference = has_noiseless ? scenario_noiseless(scenario.get())
                                       : scenario_outputs(scenario.get());
  const auto d = omgp_scenario_output_dim(scenario.get());

  auto report = omgp_cli::evaluate(predicted, truth, num_components, means, reference,
                                   d, has_noiseless ? "noiseless" : "observations");
  if (model) report.final_bound = omgp_model_final_bound(model.get());
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();

  json j = report_to_json(report, true);
  j["schema"] = 1;
  if (!means.empty() && has_noiseless) {
    const auto vs_obs =
        omgp_cli::evaluate(predicted, truth, num_components, means,
                           scenario_outputs(scenario.get()), d, "observations");
    j["per_track_rmse_vs_observations"] = vs_obs.per_track_rmse;
  }
  const std::string text = j.dump(2) + "\n";
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(opts.out, text);
    std::cout << "eval: n_err=" << report.n_err << "/" << report.total << "; wrote "
              << opts.out << "\n";
  }
}

struct BenchOpts {
  ScenarioOpts scenario;
  int seeds = 10;
  std::string out = "metrics.json";
  std::string config_path;
  std::vector<std::string> sets;
};

int default_components(const std::string& scenario) {
  return scenario == "missile" ? 3 : 2;
}

/// One seed of the benchmark: full-batch fit, three-stage warm-started
/// online fit, and the greedy tracker, all scored against ground truth.
json bench_seed(const BenchOpts& opts, std::uint64_t seed) {
  ScenarioOpts sim = opts.scenario;
  sim.seed = seed;
  auto scenario = make_scenario(sim);
  const auto n = omgp_scenario_num_samples(scenario.get());
  const auto p = omgp_scenario_input_dim(scenario.get());
  const auto d = omgp_scenario_output_dim(scenario.get());
  const auto truth = scenario_labels(scenario.get());
  const auto inputs = scenario_inputs(scenario.get());
  const auto outputs = scenario_outputs(scenario.get());
  const bool has_noiseless = omgp_scenario_has_noiseless(scenario.get()) != 0;
  const auto reference = has_noiseless ? scenario_noiseless(scenario.get()) : outputs;
  const std::string reference_name = has_noiseless ? "noiseless" : "observations";
  const int m = default_components(opts.scenario.scenario);

  auto fresh_config = [&] {
    auto cfg = build_config(opts.config_path, {});
    check(omgp_config_set(cfg.get(), "model.num_components",
                          std::to_string(m).c_str()),
          "set model.num_components");
    check(omgp_config_set(cfg.get(), "model.seed", std::to_string(seed).c_str()),
          "set model.seed");
    if (opts.scenario.scenario == "missile") {
      // Range is in meters and angles in radians; the shared noise model needs
      // comparable scales, and the harder association warrants a wider
      // initialization search.
      check(omgp_config_set(cfg.get(), "model.standardize_outputs", "true"),
            "set model.standardize_outputs");
      check(omgp_config_set(cfg.get(), "em.restarts", "32"), "set em.restarts");
    }
    for (const auto& assignment : opts.sets) apply_set(cfg.get(), assignment);
    return cfg;
  };

  json entry;
  entry["seed"] = seed;

  {
    auto cfg = fresh_config();
    omgp_model* raw = nullptr;
    check(omgp_fit(inputs.data(), outputs.data(), n, p, d, cfg.get(), &raw),
          "bench batch fit");
    ModelPtr model(raw);
    auto report =
        omgp_cli::evaluate(model_labels(model.get()), truth, m,
                           model_means(model.get()), reference, d, reference_name);
    report.final_bound = omgp_model_final_bound(model.get());
    entry["batch"] = report_to_json(report, false);
  }

  {
    // Data arrives in three contiguous chunks; each later chunk re-runs
    // training warm-started from the previous solution.
    const int64_t first = n - 2 * (n / 3);
    const int64_t second = n / 3;
    auto cfg = fresh_config();
    omgp_model* raw = nullptr;
    if (first >= m && second >= 1) {
      check(omgp_fit(inputs.data(), outputs.data(), first, p, d, cfg.get(), &raw),
            "bench online initial fit");
      ModelPtr model(raw);
      for (const int64_t offset : {first, first + second}) {
        const int64_t count = (offset == first) ? second : n - first - second;
        omgp_model* next = nullptr;
        check(omgp_fit_online(model.get(), inputs.data() + offset * p,
                              outputs.data() + offset * d, count, &next),
              "bench online update");
        model.reset(next);
      }
      auto report =
          omgp_cli::evaluate(model_labels(model.get()), truth, m,
                             model_means(model.get()), reference, d, reference_name);
      report.final_bound = omgp_model_final_bound(model.get());
      entry["online"] = report_to_json(report, false);
    } else {
      check(omgp_fit(inputs.data(), outputs.data(), n, p, d, cfg.get(), &raw),
            "bench online fallback fit");
      ModelPtr model(raw);
      auto report =
          omgp_cli::evaluate(model_labels(model.get()), truth, m,
                             model_means(model.get()), reference, d, reference_name);
      report.final_bound = omgp_model_final_bound(model.get());
      entry["online"] = report_to_json(report, false);
    }
  }

  {
    std::vector<double> times(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i)
      times[static_cast<size_t>(i)] = inputs[static_cast<size_t>(i * p)];
    const auto labels = omgp_cli::nn_baseline(times, outputs, d, m);
    const auto report = omgp_cli::evaluate(labels, truth, m, {}, reference, d, "");
    entry["nn"] = report_to_json(report, false);
  }
  return entry;
}

void run_bench(const BenchOpts& opts) {
  if (opts.scenario.scenario != "circles" && opts.scenario.scenario != "missile")
    throw std::runtime_error(
        "bench supports the association scenarios: circles, missile");
  if (opts.seeds < 1) throw std::runtime_error("bench: need at least one seed");

  const auto started = std::chrono::steady_clock::now();
  json metrics;
  metrics["schema"] = 1;
  metrics["scenario"] = opts.scenario.scenario;
  metrics["num_components"] = default_components(opts.scenario.scenario);
  metrics["per_seed"] = json::array();

  std::vector<double> n_err_batch, n_err_online, n_err_nn;
  for (int i = 0; i < opts.seeds; ++i) {
    const std::uint64_t seed = opts.scenario.seed + static_cast<std::uint64_t>(i);
    auto entry = bench_seed(opts, seed);
    n_err_batch.push_back(entry["batch"]["n_err"].get<double>());
    n_err_online.push_back(entry["online"]["n_err"].get<double>());
    n_err_nn.push_back(entry["nn"]["n_err"].get<double>());
    metrics["per_seed"].push_back(std::move(entry));
    std::cout << "seed " << seed << ": batch n_err=" << n_err_batch.back()
              << ", online n_err=" << n_err_online.back()
              << ", nn n_err=" << n_err_nn.back() << "\n";
  }
  metrics["median_n_err"] = {{"batch", median(n_err_batch)},
                             {"online", median(n_err_online)},
                             {"nn", median(n_err_nn)}};

  write_text_file(opts.out, metrics.dump(2) + "\n");
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  std::cout << "bench " << opts.scenario.scenario << ": median n_err batch="
            << format_compact(median(n_err_batch))
            << " online=" << format_compact(median(n_err_online))
            << " nn=" << format_compact(median(n_err_nn)) << " over " << opts.seeds
            << " seeds (" << format_compact(elapsed) << "s); wrote " << opts.out
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overlapping mixtures of Gaussian processes: data association "
               "and multimodal regression"};
  app.set_version_flag("--version", omgp_version());
  app.require_subcommand(1);

  const std::vector<std::string> all_scenarios = {"circles", "missile", "sinc",
                                                  "multilevel"};

  ScenarioOpts sim_opts;
  std::string sim_out;
  auto* simulate =
      app.add_subcommand("simulate", "Generate a scenario CSV plus JSON sidecar");
  add_scenario_options(simulate, sim_opts, all_scenarios);
  simulate->add_option("--out", sim_out,
                       "Output CSV path, or a directory (trailing /)")
      ->required();

  FitOpts fit_opts;
  auto* fit = app.add_subcommand("fit", "Fit a model to a data CSV");
  fit->add_option("--data", fit_opts.data, "Data CSV (header row required)")
      ->required();
  fit->add_option("--config", fit_opts.config_path, "key = value config file");
  fit->add_option("--out", fit_opts.out, "Model JSON output path")->required();
  fit->add_option("--set", fit_opts.sets,
                  "Config override key=value (repeatable, applied in order)");

  std::string associate_model, associate_out;
  auto* associate =
      app.add_subcommand("associate", "Write hard sample-to-component labels");
  associate->add_option("--model", associate_model, "Model JSON")->required();
  associate->add_option("--out", associate_out, "Labels CSV output path")->required();

  std::string predict_model, predict_test, predict_out;
  auto* predict =
      app.add_subcommand("predict", "Mixture predictions at test inputs");
  predict->add_option("--model", predict_model, "Model JSON")->required();
  predict->add_option("--test", predict_test,
                      "Test CSV (in_N columns, or every column as inputs)")
      ->required();
  predict->add_option("--out", predict_out, "Prediction CSV output path")->required();

  EvalOpts eval_opts;
  auto* eval = app.add_subcommand(
      "eval", "Score predicted labels against scenario ground truth");
  eval->add_option("--labels", eval_opts.labels_path, "CSV with a label column")
      ->required();
  eval->add_option("--scenario", eval_opts.scenario_path,
                   "Scenario CSV (with sidecar for noiseless reference)")
      ->required();
  eval->add_option("--model", eval_opts.model_path,
                   "Model JSON (enables RMSE and final bound)");
  eval->add_option("--out", eval_opts.out, "Report JSON path (default: stdout)");

  BenchOpts bench_opts;
  auto* bench = app.add_subcommand(
      "bench", "Seeded comparison: batch fit vs online fit vs greedy tracker");
  add_scenario_options(bench, bench_opts.scenario, {"circles", "missile"});
  bench->get_option("--scenario")->description("Association scenario");
  bench->add_option("--seeds", bench_opts.seeds, "Number of seeds (base --seed + i)")
      ->capture_default_str();
  bench->add_option("--out", bench_opts.out, "Metrics JSON path")
      ->capture_default_str();
  bench->add_option("--config", bench_opts.config_path, "key = value config file");
  bench->add_option("--set", bench_opts.sets,
                    "Config override key=value (repeatable)");

  simulate->callback([&] { run_simulate(sim_opts, sim_out); });
  fit->callback([&] { run_fit(fit_opts); });
  associate->callback([&] { run_associate(associate_model, associate_out); });
  predict->callback([&] { run_predict(predict_model, predict_test, predict_out); });
  eval->callback([&] { run_eval(eval_opts); });
  bench->callback([&] { run_bench(bench_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "omgp: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
