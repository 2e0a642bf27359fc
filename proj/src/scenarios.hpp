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

#ifndef OMGP_SCENARIOS_HPP
#define OMGP_SCENARIOS_HPP

#include <cstdint>
#include <string>

#include "types.hpp"

namespace omgp {

/// Two sources on the same unit circle rotating in opposite directions,
/// observed at `samples` evenly spaced time instants spanning
/// `num_revolutions` revolutions (one observation of each source per
/// instant, so 2*samples rows). Inputs are times in revolution units,
/// outputs noisy 2-D positions. The sources start together at (1, 0) and
/// cross twice per revolution.
Scenario gen_circles(double num_revolutions, int samples, double noise_std,
                     std::uint64_t seed);

/// Constant-velocity targets in 3-D observed through range/azimuth/elevation.
/// Each source starts from params.initial_states and follows
/// s_{t+1} = F s_t + G v_t with v_t ~ N(0, Q); measurements are h(s_t) + e_t
/// with e_t ~ N(0, R), taken at every step for every source (rows grouped by
/// time instant). noiseless_outputs holds h(s_t) without measurement noise.
Scenario gen_missile_to_air(const StateSpaceParams& params, std::uint64_t seed);

/// Noisy sinc(x) = sin(x)/x on an even grid over [-10, 10], with
/// round(outlier_fraction * samples) points replaced by draws from a broad
/// uniform. Labels: 0 = signal, 1 = outlier. noiseless_outputs holds the
/// clean sinc everywhere.
Scenario gen_sinc_outliers(int samples, double outlier_fraction, double noise_std,
                           std::uint64_t seed);

/// num_functions offset sinusoids snapshotted at `samples` irregular time
/// instants; each (snapshot, function) pair is independently dropped with
/// probability `dropout`, so not every snapshot sees every function. Labels
/// give the generating function.
Scenario gen_multilevel(int num_functions, int samples, double noise_std,
                        std::uint64_t seed, double dropout = 0.2);

/// Range/azimuth/elevation of a position; the elevation convention measures
/// positive angles downward (-Z against the horizontal distance).
Eigen::Vector3d range_bearing_elevation(const Eigen::Vector3d& position);

/// Load a Scenario from a CSV file with a header row: selected columns
/// become inputs/outputs, an optional column the integer labels. No
/// noiseless ground truth is attached.
Scenario load_csv(const std::string& path, const std::vector<int>& input_cols,
                  const std::vector<int>& output_cols, std::optional<int> label_col = {});

/// Write scenario data to `csv_path` (header in_*, out_*, and label when
/// present) plus a JSON sidecar next to it (extension replaced by .json)
/// holding the name, seed, and any noiseless outputs.
void save_scenario(const Scenario& scenario, const std::string& csv_path);

/// Inverse of save_scenario: reads the CSV by its in_*/out_*/label header
/// names, then merges the sidecar when one exists.
Scenario load_scenario(const std::string& csv_path);

/// Sidecar path for a data file: extension replaced by ".json".
std::string sidecar_path(const std::string& csv_path);

}  // namespace omgp

#endif
