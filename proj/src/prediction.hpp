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

#ifndef OMGP_PREDICTION_HPP
#define OMGP_PREDICTION_HPP

#include <vector>

#include "inference.hpp"
#include "types.hpp"

namespace omgp {

/// Gaussian-mixture predictive distribution at a batch of test inputs.
/// Component weights are the prior mixing factors (constant across inputs);
/// per-component variances are shared across output dimensions.
struct MixturePrediction {
  MatrixXd test_inputs;         // N* x P
  VectorXd component_weights;   // M, sums to 1
  std::vector<MatrixXd> means;  // M entries of N* x D, in original output units
  std::vector<VectorXd> variances;  // M entries of N*, per standardized dimension
  // Output dimension d has predictive variance variances[m] * output_scales(d)^2
  // in original units; all ones unless the model standardizes outputs.
  Eigen::RowVectorXd output_scales;

  int num_components() const { return static_cast<int>(means.size()); }
  Eigen::Index num_points() const { return test_inputs.rows(); }
  Eigen::Index output_dim() const { return means.empty() ? 0 : means.front().cols(); }
  void validate() const;
};

/// Per-component predictive means and variances at X_star through triangular
/// solves against the stored posterior factors; variances never fall below
/// the component's noise variance.
MixturePrediction predict(const OmgpModel& model, const MatrixXd& test_inputs);

/// Mixture density sum_m w_m prod_d N(y_star_d | mean, variance) at one test
/// point.
double predictive_density(const MixturePrediction& prediction, const VectorXd& y_star,
                          Eigen::Index point_index);

/// Hard assignment of every training sample to its most responsible
/// component; ties break toward the lowest index.
VectorXi associate(const OmgpModel& model);

/// One CSV row per (test point, component): input dims, component index,
/// mean_1..mean_D, variance, weight.
void save_prediction_csv(const MixturePrediction& prediction, const std::string& path);

/// One CSV row per training sample: row index, label, max responsibility.
void save_labels_csv(const OmgpModel& model, const std::string& path);

}  // namespace omgp

#endif
