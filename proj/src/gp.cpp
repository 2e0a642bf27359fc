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

#include "gp.hpp"

#include <cmath>

#include "linalg.hpp"

namespace omgp {

GpFit gp_fit(const DataSet& data, const KernelSpec& kernel, double noise_variance) {
  data.validate();
  if (data.num_samples() < 1) throw std::invalid_argument("gp_fit: need at least one sample");
  if (!(noise_variance > 0.0)) throw std::invalid_argument("gp_fit: noise variance must be positive");
  kernel.validate(data.input_dim());

  GpFit fit;
  fit.inputs = data.inputs;
  fit.kernel = kernel;
  fit.noise_variance = noise_variance;
  fit.target_means = data.outputs.colwise().mean();
  fit.centered_targets = data.outputs.rowwise() - fit.target_means;

  MatrixXd cov = gram(kernel, data.inputs);
  cov.diagonal().array() += noise_variance;
  fit.chol_factor = cholesky_with_escalation(cov, jitter_for(kernel), "gp_fit");
  return fit;
}

GpPrediction gp_predict(const GpFit& fit, const MatrixXd& x_star) {
  if (x_star.cols() != fit.inputs.cols())
    throw std::invalid_argument("gp_predict: test inputs disagree on dimensionality");

  const MatrixXd k_star = gram(fit.kernel, fit.inputs, x_star);  // N x N*
  const auto& l = fit.chol_factor;

  // alpha = (K + sigma^2 I)^{-1} Y through two triangular solves.
  MatrixXd alpha = l.triangularView<Eigen::Lower>().solve(fit.centered_targets);
  alpha = l.transpose().triangularView<Eigen::Upper>().solve(alpha);

  GpPrediction pred;
  pred.means = k_star.transpose() * alpha;
  pred.means.rowwise() += fit.target_means;

  const MatrixXd v = l.triangularView<Eigen::Lower>().solve(k_star);  // N x N*
  pred.variances.resize(x_star.rows());
  for (Eigen::Index i = 0; i < x_star.rows(); ++i) {
    const double k_ss = gram(fit.kernel, x_star.row(i), x_star.row(i))(0, 0);
    const double reduction = v.col(i).squaredNorm();
    pred.variances(i) = fit.noise_variance + std::max(k_ss - reduction, 0.0);
  }
  return pred;
}

double gp_log_evidence(const GpFit& fit) {
  const Eigen::Index n = fit.num_samples();
  const Eigen::Index d = fit.output_dim();
  const MatrixXd v =
      fit.chol_factor.triangularView<Eigen::Lower>().solve(fit.centered_targets);
  const double quadratic = v.squaredNorm();
  const double log_det = log_det_from_cholesky(fit.chol_factor);
  return -0.5 * quadratic - 0.5 * static_cast<double>(d) * log_det -
         0.5 * static_cast<double>(n * d) * std::log(2.0 * 3.14159265358979323846);
}

}  // namespace omgp
