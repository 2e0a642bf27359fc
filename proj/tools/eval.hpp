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

#ifndef OMGP_TOOLS_EVAL_HPP
#define OMGP_TOOLS_EVAL_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace omgp_cli {

/// Association quality of one fitted model against scenario ground truth.
struct EvalReport {
  std::vector<double> per_track_rmse;  // M entries; empty when no means given
  int n_err = 0;
  int total = 0;
  std::vector<int> aligning_permutation;  // true track k -> component perm[k]
  double wall_time_seconds = 0.0;
  double final_bound = std::numeric_limits<double>::quiet_NaN();
  std::string rmse_reference;  // "noiseless" | "observations" | ""
};

/// Searches all M! component relabelings (M <= 6), picks the one minimizing
/// misassignments against the true labels, and reports the misassignment
/// count plus, when component means are supplied, the per-track RMSE of the
/// aligned component's per-sample means against the reference outputs.
///
/// Labels are N entries in [0, M). component_means has M entries, each a
/// row-major N x D buffer (pass an empty outer vector to skip RMSE).
/// reference_outputs is row-major N x D. rmse_reference is recorded verbatim.
EvalReport evaluate(const std::vector<int>& predicted_labels,
                    const std::vector<int>& true_labels, int num_components,
                    const std::vector<std::vector<double>>& component_means,
                    const std::vector<double>& reference_outputs, int64_t output_dim,
                    const std::string& rmse_reference);

/// Classical greedy tracker: observations arrive in time order (rows sharing
/// an identical time value form one step); each step's observations pair with
/// tracks by repeatedly taking the closest (observation, track-last-position)
/// pair. The first step is assigned in row order and must contain at least
/// `num_tracks` observations.
std::vector<int> nn_baseline(const std::vector<double>& times,
                             const std::vector<double>& outputs, int64_t output_dim,
                             int num_tracks);

}  // namespace omgp_cli

#endif
