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

#ifndef OMGP_CONFIG_HPP
#define OMGP_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inference.hpp"

namespace omgp {

/// Flat `key = value` configuration with dotted keys and `#` comments.
/// Values stay textual until resolve() binds them against a data set, at
/// which point `auto` placeholders become data-derived numbers.
///
/// Keys:
///   model.num_components        integer >= 1 (default 2)
///   model.noise_variance        positive real or `auto` (default auto)
///   model.per_component_noise   true|false (default false)
///   model.standardize_outputs   true|false (default false)
///   model.prior                 `uniform` (the only file-level choice)
///   model.seed                  unsigned 64-bit integer (default 0)
///   em.max_rounds               integer >= 1 (default 50)
///   em.estep_tol                positive real (default 1e-6)
///   em.max_inner_iterations     integer >= 1 (default 200)
///   em.restarts                 integer >= 1 (default 3)
///   mstep.max_evals             integer >= 0 (default 20)
///   mstep.gradient_tol          positive real (default 1e-5)
///   kernel.family               se_ard|white_noise (default se_ard)
///   kernel.signal_power         positive real or `auto`
///   kernel.length_scales        comma list of positive reals, one value
///                               broadcast to all input dims, or `auto`
///   kernel.noise_level          positive real or `auto`
///   kernel.<m>.<field>          per-component override of any kernel field
///   data.input_cols             comma list of column indices (CSV ingestion)
///   data.output_cols            comma list of column indices
///   data.label_col              single column index
///
/// `auto` resolution: signal_power/noise_level become the pooled variance of
/// the outputs as the fit sees them (centered, standardized when switched on)
/// and noise_variance that pooled variance / 10. Each length-scale entry
/// becomes (input span / k)^2 with one k from {20, 10, 5, 3, 2} shared across
/// dimensions, chosen by single-GP log evidence on the same outputs.
class FileConfig {
 public:
  static FileConfig load(const std::string& path);
  static FileConfig parse(const std::string& text, const std::string& origin);

  /// Validates the key and the value's syntax; throws std::invalid_argument.
  void set(const std::string& key, const std::string& value);
  std::optional<std::string> get(const std::string& key) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }

  /// Bind against a data set: fill defaults, resolve `auto`, build kernels.
  OmgpConfig resolve(const DataSet& data) const;

  /// CSV ingestion hints; unset means "use the file's own header names".
  std::optional<std::vector<int>> input_cols() const;
  std::optional<std::vector<int>> output_cols() const;
  std::optional<int> label_col() const;

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace omgp

#endif
