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

#include "eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace omgp_cli {

namespace {

void check_labels(const std::vector<int>& labels, int num_components,
                  const char* what) {
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= num_components)
      throw std::invalid_argument(std::string(what) + " label out of range at row " +
                                  std::to_string(i));
  }
}

double squared_distance(const std::vector<double>& outputs, int64_t d, int64_t row,
                        const std::vector<double>& point) {
  double sum = 0.0;
  for (int64_t j = 0; j < d; ++j) {
    const double delta = outputs[static_cast<size_t>(row * d + j)] -
                         point[static_cast<size_t>(j)];
    sum += delta * delta;
  }
  return sum;
}

}  // namespace

EvalReport evaluate(const std::vector<int>& predicted_labels,
                    const std::vector<int>& true_labels, int num_components,
                    const std::vector<std::vector<double>>& component_means,
                    const std::vector<double>& reference_outputs, int64_t output_dim,
                    const std::string& rmse_reference) {
  if (num_components < 1) throw std::invalid_argument("evaluate: need >= 1 component");
  if (num_components > 6)
    throw std::invalid_argument(
        "evaluate: permutation alignment supports at most 6 components");
  if (predicted_labels.size() != true_labels.size())
    throw std::invalid_argument("evaluate: label vectors disagree on length");
  check_labels(predicted_labels, num_components, "predicted");
  check_labels(true_labels, num_components, "true");

  const size_t n = true_labels.size();
  const int m = num_components;
  if (!component_means.empty()) {
    if (static_cast<int>(component_means.size()) != m)
      throw std::invalid_argument("evaluate: need one mean buffer per component");
    if (output_dim < 1) throw std::invalid_argument("evaluate: output_dim must be >= 1");
    for (const auto& buffer : component_means)
      if (buffer.size() != n * static_cast<size_t>(output_dim))
        throw std::invalid_argument("evaluate: mean buffer has wrong size");
    if (reference_outputs.size() != n * static_cast<size_t>(output_dim))
      throw std::invalid_argument("evaluate: reference buffer has wrong size");
  }

  // Lexicographic enumeration starts at the identity, so ties keep it.
  std::vector<int> perm(static_cast<size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best_perm = perm;
  int best_errors = static_cast<int>(n) + 1;
  do {
    int errors = 0;
    for (size_t i = 0; i < n; ++i)
      if (predicted_labels[i] != perm[static_cast<size_t>(true_labels[i])]) ++errors;
    if (errors < best_errors) {
      best_errors = errors;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  EvalReport report;
  report.n_err = best_errors;
  report.total = static_cast<int>(n);
  report.aligning_permutation = best_perm;
  report.rmse_reference = component_means.empty() ? "" : rmse_reference;

  if (!component_means.empty()) {
    report.per_track_rmse.assign(static_cast<size_t>(m),
                                 std::numeric_limits<double>::quiet_NaN());
    for (int k = 0; k < m; ++k) {
      const auto& means = component_means[static_cast<size_t>(best_perm[k])];
      double sum = 0.0;
      int64_t count = 0;
      for (size_t i = 0; i < n; ++i) {
        if (true_labels[i] != k) continue;
        for (int64_t j = 0; j < output_dim; ++j) {
          const size_t idx = i * static_cast<size_t>(output_dim) +
                             static_cast<size_t>(j);
          const double delta = means[idx] - reference_outputs[idx];
          sum += delta * delta;
        }
        ++count;
      }
      if (count > 0)
        report.per_track_rmse[static_cast<size_t>(k)] =
            std::sqrt(sum / static_cast<double>(count * output_dim));
    }
  }
  return report;
}

std::vector<int> nn_baseline(const std::vector<double>& times,
                             const std::vector<double>& outputs, int64_t output_dim,
                             int num_tracks) {
  if (num_tracks < 1) throw std::invalid_argument("nn baseline: need >= 1 track");
  if (output_dim < 1) throw std::invalid_argument("nn baseline: output_dim must be >= 1");
  const int64_t n = static_cast<int64_t>(times.size());
  if (outputs.size() != static_cast<size_t>(n) * static_cast<size_t>(output_dim))
    throw std::invalid_argument("nn baseline: outputs buffer has wrong size");

  std::vector<int> labels(static_cast<size_t>(n), 0);
  // last[k] holds track k's most recently paired observation.
  std::vector<std::vector<double>> last(
      static_cast<size_t>(num_tracks),
      std::vector<double>(static_cast<size_t>(output_dim), 0.0));

  int64_t begin = 0;
  bool first_step = true;
  while (begin < n) {
    int64_t end = begin + 1;
    while (end < n && times[static_cast<size_t>(end)] == times[static_cast<size_t>(begin)])
      ++end;
    const int64_t step_size = end - begin;

    if (first_step) {
      if (step_size < num_tracks)
        throw std::invalid_argument(
            "nn baseline: first timestep has fewer observations than tracks");
      for (int64_t i = begin; i < end; ++i) {
        const int track = static_cast<int>(std::min<int64_t>(i - begin, num_tracks - 1));
        labels[static_cast<size_t>(i)] = track;
        for (int64_t j = 0; j < output_dim; ++j)
          last[static_cast<size_t>(track)][static_cast<size_t>(j)] =
              outputs[static_cast<size_t>(i * output_dim + j)];
      }
      first_step = false;
      begin = end;
      continue;
    }

    // Greedy pairing: repeatedly take the globally closest unused
    // (observation, track) pair. Ties keep the earliest pair scanned.
    std::vector<bool> obs_used(static_cast<size_t>(step_size), false);
    std::vector<bool> track_used(static_cast<size_t>(num_tracks), false);
    const int64_t pairs = std::min<int64_t>(step_size, num_tracks);
    for (int64_t pair = 0; pair < pairs; ++pair) {
      double best = std::numeric_limits<double>::infinity();
      int64_t best_obs = -1;
      int best_track = -1;
      for (int64_t i = 0; i < step_size; ++i) {
        if (obs_used[static_cast<size_t>(i)]) continue;
        for (int k = 0; k < num_tracks; ++k) {
          if (track_used[static_cast<size_t>(k)]) continue;
          const double dist =
              squared_distance(outputs, output_dim, begin + i, last[static_cast<size_t>(k)]);
          if (dist < best) {
            best = dist;
            best_obs = i;
            best_track = k;
          }
        }
      }
      obs_used[static_cast<size_t>(best_obs)] = true;
      track_used[static_cast<size_t>(best_track)] = true;
      labels[static_cast<size_t>(begin + best_obs)] = best_track;
      for (int64_t j = 0; j < output_dim; ++j)
        last[static_cast<size_t>(best_track)][static_cast<size_t>(j)] =
            outputs[static_cast<size_t>((begin + best_obs) * output_dim + j)];
    }

    // Surplus observations (more than tracks) take their nearest track
    // without moving it.
    for (int64_t i = 0; i < step_size; ++i) {
      if (obs_used[static_cast<size_t>(i)]) continue;
      double best = std::numeric_limits<double>::infinity();
      int best_track = 0;
      for (int k = 0; k < num_tracks; ++k) {
        const double dist =
            squared_distance(outputs, output_dim, begin + i, last[static_cast<size_t>(k)]);
        if (dist < best) {
          best = dist;
          best_track = k;
        }
      }
      labels[static_cast<size_t>(begin + i)] = best_track;
    }
    begin = end;
  }
  return labels;
}

}  // namespace omgp_cli
