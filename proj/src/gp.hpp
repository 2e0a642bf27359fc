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

#ifndef OMGP_GP_HPP
#define OMGP_GP_HPP

#include "kernels.hpp"
#include "types.hpp"

namespace omgp {

/// A fitted single-component GP regressor. Output dimensions are treated as
/// independent and share one covariance, so a single Cholesky factor of
/// K + sigma^2 I serves all of them. Targets are mean-centered per output
/// dimension at fit time; predictions add the stored means back.
struct GpFit {
  MatrixXd inputs;            // N x P
  MatrixXd centered_targets;  // N x D
  Eigen::RowVectorXd target_means;
  KernelSpec kernel;
  double noise_variance = 0.0;
  MatrixXd chol_factor;  // lower-triangular factor of K + sigma^2 I

  Eigen::Index num_samples() const { return inputs.rows(); }
  Eigen::Index output_dim() const { return centered_targets.cols(); }
};

GpFit gp_fit(const DataSet& data, const KernelSpec& kernel, double noise_variance);

struct GpPrediction {
  MatrixXd means;      // N* x D
  VectorXd variances;  // N*, shared across output dimensions
};

GpPrediction gp_predict(const GpFit& fit, const MatrixXd& x_star);

/// Log marginal likelihood of the centered targets, summed over output
/// dimensions, evaluated through the stored Cholesky factor.
double gp_log_evidence(const GpFit& fit);

}  // namespace omgp

#endif
