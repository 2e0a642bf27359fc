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

#include "config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <fstream>
#include <sstream>

#include "gp.hpp"
#include "kernels.hpp"

namespace omgp {

namespace {

std::string trim(const std::string& s) {
  size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

bool parse_double(const std::string& value, double& out) {
  const char* begin = value.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end != begin && end != nullptr && *end == '\0';
}

bool parse_int(const std::string& value, long long& out) {
  const char* begin = value.c_str();
  char* end = nullptr;
  out = std::strtoll(begin, &end, 10);
  return end != begin && end != nullptr && *end == '\0';
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream stream(value);
  while (std::getline(stream, item, ',')) items.push_back(trim(item));
  return items;
}

enum class ValueKind {
  PositiveInt,
  NonNegativeInt,
  PositiveRealOrAuto,
  PositiveReal,
  Bool,
  Seed,
  Prior,
  Family,
  LengthScales,
  IntList,
  Int,
};

bool value_ok(ValueKind kind, const std::string& value) {
  double d = 0.0;
  long long i = 0;
  switch (kind) {
    case ValueKind::PositiveInt:
      return parse_int(value, i) && i >= 1;
    case ValueKind::NonNegativeInt:
      return parse_int(value, i) && i >= 0;
    case ValueKind::PositiveRealOrAuto:
      if (value == "auto") return true;
      return parse_double(value, d) && d > 0.0 && std::isfinite(d);
    case ValueKind::PositiveReal:
      return parse_double(value, d) && d > 0.0 && std::isfinite(d);
    case ValueKind::Bool:
      return value == "true" || value == "false";
    case ValueKind::Seed:
      if (value.empty()) return false;
      for (char c : value)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      return true;
    case ValueKind::Prior:
      return value == "uniform";
    case ValueKind::Family:
      try {
        kernel_family_from_string(value);
        return true;
      } catch (const std::invalid_argument&) {
        return false;
      }
    case ValueKind::LengthScales: {
      if (value == "auto") return true;
      const std::vector<std::string> items = split_list(value);
      if (items.empty()) return false;
      for (const std::string& item : items)
        if (!parse_double(item, d) || !(d > 0.0) || !std::isfinite(d)) return false;
      return true;
    }
    case ValueKind::IntList: {
      const std::vector<std::string> items = split_list(value);
      if (items.empty()) return false;
      for (const std::string& item : items)
        if (!parse_int(item, i) || i < 0) return false;
      return true;
    }
    case ValueKind::Int:
      return parse_int(value, i) && i >= 0;
  }
  return false;
}

/// Maps a key to its value kind; per-component kernel keys normalize to the
/// base kernel key. Returns false for unknown keys.
bool key_kind(const std::string& key, ValueKind& kind) {
  std::string base = key;
  if (base.rfind("kernel.", 0) == 0) {
    // kernel.<m>.<field> -> kernel.<field>
    const size_t first = base.find('.');
    const size_t second = base.find('.', first + 1);
    if (second != std::string::npos) {
      const std::string index = base.substr(first + 1, second - first - 1);
      long long parsed = 0;
      if (!parse_int(index, parsed) || parsed < 0) return false;
      base = "kernel." + base.substr(second + 1);
    }
  }
  if (base == "model.num_components") kind = ValueKind::PositiveInt;
  else if (base == "model.noise_variance") kind = ValueKind::PositiveRealOrAuto;
  else if (base == "model.per_component_noise") kind = ValueKind::Bool;
  else if (base == "model.standardize_outputs") kind = ValueKind::Bool;
  else if (base == "model.prior") kind = ValueKind::Prior;
  else if (base == "model.seed") kind = ValueKind::Seed;
  else if (base == "em.max_rounds") kind = ValueKind::PositiveInt;
  else if (base == "em.estep_tol") kind = ValueKind::PositiveReal;
  else if (base == "em.max_inner_iterations") kind = ValueKind::PositiveInt;
  else if (base == "em.restarts") kind = ValueKind::PositiveInt;
  else if (base == "mstep.max_evals") kind = ValueKind::NonNegativeInt;
  else if (base == "mstep.gradient_tol") kind = ValueKind::PositiveReal;
  else if (base == "kernel.family") kind = ValueKind::Family;
  else if (base == "kernel.signal_power") kind = ValueKind::PositiveRealOrAuto;
  else if (base == "kernel.length_scales") kind = ValueKind::LengthScales;
  else if (base == "kernel.noise_level") kind = ValueKind::PositiveRealOrAuto;
  else if (base == "data.input_cols") kind = ValueKind::IntList;
  else if (base == "data.output_cols") kind = ValueKind::IntList;
  else if (base == "data.label_col") kind = ValueKind::Int;
  else return false;
  return true;
}

}  // namespace

FileConfig FileConfig::load(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open config '" + path + "' for reading");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse(buffer.str(), path);
}

FileConfig FileConfig::parse(const std::string& text, const std::string& origin) {
  FileConfig config;
  std::istringstream stream(text);
  std::string line;
  size_t line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw IoError(origin + ":" + std::to_string(line_number) +
                    ": expected 'key = value', found '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      config.set(key, value);
    } catch (const std::invalid_argument& e) {
      throw IoError(origin + ":" + std::to_string(line_number) + ": " + e.what());
    }
  }
  return config;
}

void FileConfig::set(const std::string& key, const std::string& value) {
  ValueKind kind;
  if (!key_kind(key, kind)) throw std::invalid_argument("unknown config key '" + key + "'");
  if (!value_ok(kind, value))
    throw std::invalid_argument("invalid value '" + value + "' for config key '" + key + "'");
  entries_[key] = value;
}

std::optional<std::string> FileConfig::get(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::vector<int>> FileConfig::input_cols() const {
  const auto value = get("data.input_cols");
  if (!value) return std::nullopt;
  std::vector<int> cols;
  for (const std::string& item : split_list(*value)) cols.push_back(std::stoi(item));
  return cols;
}

std::optional<std::vector<int>> FileConfig::output_cols() const {
  const auto value = get("data.output_cols");
  if (!value) return std::nullopt;
  std::vector<int> cols;
  for (const std::string& item : split_list(*value)) cols.push_back(std::stoi(item));
  return cols;
}

std::optional<int> FileConfig::label_col() const {
  const auto value = get("data.label_col");
  if (!value) return std::nullopt;
  return std::stoi(*value);
}

OmgpConfig FileConfig::resolve(const DataSet& data) const {
  data.validate();
  if (data.num_samples() < 1)
    throw std::invalid_argument("config resolution needs a non-empty data set");
  const Eigen::Index p = data.input_dim();

  // Data-derived fallbacks for `auto`: pooled variance of the outputs as the
  // fit will see them (centered, and per-dimension standardized when that is
  // switched on) and per-dimension input spans.
  const bool standardize = [&] {
    const auto v = get("model.standardize_outputs");
    return v && *v == "true";
  }();
  const Eigen::RowVectorXd means = data.outputs.colwise().mean();
  MatrixXd processed = data.outputs.rowwise() - means;
  if (standardize) {
    for (Eigen::Index j = 0; j < processed.cols(); ++j) {
      const double sd = std::sqrt(processed.col(j).squaredNorm() /
                                  static_cast<double>(processed.rows()));
      if (sd > 0.0) processed.col(j) /= sd;
    }
  }
  double pooled = processed.squaredNorm() / static_cast<double>(processed.size());
  if (!(pooled > 0.0)) pooled = 1.0;

  // Auto length-scales: candidate grids of (span/k)^2 per dimension, scored by
  // single-GP log evidence at pooled signal power and a tenth of it as noise.
  // Span fractions alone cannot serve both slowly and quickly varying targets,
  // so the data picks. Large sets are thinned; the scan only seeds the fit.
  Eigen::RowVectorXd spans(p);
  for (Eigen::Index j = 0; j < p; ++j) {
    double span = data.inputs.col(j).maxCoeff() - data.inputs.col(j).minCoeff();
    spans(j) = span > 0.0 ? span : 1.0;
  }
  std::vector<double> auto_scales(static_cast<size_t>(p));
  {
    DataSet scan;
    const Eigen::Index stride = std::max<Eigen::Index>(1, data.num_samples() / 500);
    const Eigen::Index rows = (data.num_samples() + stride - 1) / stride;
    scan.inputs.resize(rows, p);
    scan.outputs.resize(rows, processed.cols());
    for (Eigen::Index i = 0; i < rows; ++i) {
      scan.inputs.row(i) = data.inputs.row(i * stride);
      scan.outputs.row(i) = processed.row(i * stride);
    }
    double best = -std::numeric_limits<double>::infinity();
    double chosen = 3.0;
    for (const double k : {20.0, 10.0, 5.0, 3.0, 2.0}) {
      std::vector<double> candidate(static_cast<size_t>(p));
      for (Eigen::Index j = 0; j < p; ++j)
        candidate[static_cast<size_t>(j)] = (spans(j) / k) * (spans(j) / k);
      try {
        const GpFit probe =
            gp_fit(scan, KernelSpec::se_ard(pooled, candidate), pooled / 10.0);
        const double evidence = gp_log_evidence(probe);
        if (std::isfinite(evidence) && evidence > best) {
          best = evidence;
          chosen = k;
        }
      } catch (const std::exception&) {
        // An ill-conditioned candidate simply drops out of the scan.
      }
    }
    for (Eigen::Index j = 0; j < p; ++j)
      auto_scales[static_cast<size_t>(j)] = (spans(j) / chosen) * (spans(j) / chosen);
  }

  const auto text = [&](const std::string& key, const std::string& fallback) {
    const auto v = get(key);
    return v ? *v : fallback;
  };
  const auto numeric = [&](const std::string& key, double fallback) {
    const auto v = get(key);
    return v ? std::strtod(v->c_str(), nullptr) : fallback;
  };
  const auto integer = [&](const std::string& key, long long fallback) {
    const auto v = get(key);
    return v ? std::strtoll(v->c_str(), nullptr, 10) : fallback;
  };

  OmgpConfig config;
  config.num_components = static_cast<int>(integer("model.num_components", 2));

  const std::string noise = text("model.noise_variance", "auto");
  config.noise_variance = (noise == "auto") ? pooled / 10.0 : std::strtod(noise.c_str(), nullptr);
  config.per_component_noise = text("model.per_component_noise", "false") == "true";
  config.standardize_outputs = standardize;
  config.seed = std::strtoull(text("model.seed", "0").c_str(), nullptr, 10);
  config.max_em_rounds = static_cast<int>(integer("em.max_rounds", 50));
  config.estep_tol = numeric("em.estep_tol", 1e-6);
  config.max_inner_iterations = static_cast<int>(integer("em.max_inner_iterations", 200));
  config.num_restarts = static_cast<int>(integer("em.restarts", 3));
  config.mstep.max_evals = static_cast<int>(integer("mstep.max_evals", 20));
  config.mstep.gradient_tol = numeric("mstep.gradient_tol", 1e-5);

  const auto component_text = [&](int m, const std::string& field, const std::string& fallback) {
    const auto specific = get("kernel." + std::to_string(m) + "." + field);
    if (specific) return *specific;
    return text("kernel." + field, fallback);
  };

  for (int m = 0; m < config.num_components; ++m) {
    const KernelFamily family = kernel_family_from_string(component_text(m, "family", "se_ard"));
    KernelSpec spec;
    if (family == KernelFamily::SquaredExponentialArd) {
      const std::string power = component_text(m, "signal_power", "auto");
      const std::string scales = component_text(m, "length_scales", "auto");
      std::vector<double> lengths;
      if (scales == "auto") {
        lengths = auto_scales;
      } else {
        for (const std::string& item : split_list(scales))
          lengths.push_back(std::strtod(item.c_str(), nullptr));
        if (lengths.size() == 1 && p > 1) lengths.assign(static_cast<size_t>(p), lengths[0]);
        if (lengths.size() != static_cast<size_t>(p))
          throw std::invalid_argument(
              "config: kernel.length_scales needs one entry per input dimension (" +
              std::to_string(p) + "), got " + std::to_string(lengths.size()));
      }
      spec = KernelSpec::se_ard(
          power == "auto" ? pooled : std::strtod(power.c_str(), nullptr), std::move(lengths));
    } else {
      const std::string level = component_text(m, "noise_level", "auto");
      spec = KernelSpec::white_noise(level == "auto" ? pooled
                                                     : std::strtod(level.c_str(), nullptr));
    }
    config.kernels.push_back(std::move(spec));
  }

  config.validate(data.num_samples(), p);
  return config;
}

}  // namespace omgp
