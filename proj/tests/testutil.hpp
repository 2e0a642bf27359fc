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

#ifndef OMGP_TESTS_TESTUTIL_HPP
#define OMGP_TESTS_TESTUTIL_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "gp.hpp"
#include "inference.hpp"
#include "kernels.hpp"
#include "rng.hpp"
#include "types.hpp"

namespace omgp::test {

constexpr double kLog2Pi = 1.8378770664093454835606594728112;

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-12});
}

inline double rel_diff(const MatrixXd& a, const MatrixXd& b) {
  return (a - b).norm() / std::max({a.norm(), b.norm(), 1e-12});
}

/// Fresh empty directory under the system temp root; never reused.
inline std::string fresh_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  const auto dir = std::filesystem::temp_directory_path() /
                   ("libomgp_tests_" + tag + "_" + std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

/// Inputs spread over [-2, 2]^P with smooth sinusoidal outputs of O(1)
/// magnitude plus a little observation noise: plausible GP data whose Gram
/// matrices stay comfortably conditioned.
inline DataSet smooth_dataset(RngStream& rng, Eigen::Index n, Eigen::Index p,
                              Eigen::Index d) {
  DataSet data;
  data.inputs.resize(n, p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < p; ++j) data.inputs(i, j) = rng.uniform(-2.0, 2.0);
  data.outputs.resize(n, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    Eigen::RowVectorXd w(p);
    for (Eigen::Index j = 0; j < p; ++j) w(j) = rng.uniform(0.5, 1.5);
    const double phase = rng.uniform(0.0, 6.0);
    const double amp = rng.uniform(0.5, 1.5);
    for (Eigen::Index i = 0; i < n; ++i)
      data.outputs(i, k) =
          amp * std::sin(data.inputs.row(i).dot(w) + phase) + 0.05 * rng.normal();
  }
  return data;
}

/// SE-ARD kernel with moderate hyperparameters (well away from degeneracy).
inline KernelSpec random_se(RngStream& rng, Eigen::Index p) {
  std::vector<double> scales(static_cast<size_t>(p));
  for (double& s : scales) s = rng.uniform(0.5, 2.5);
  return KernelSpec::se_ard(rng.uniform(0.5, 2.0), std::move(scales));
}

/// Row-stochastic matrix with every entry bounded away from zero: raw draws
/// in [lo, 1] keep the normalized minimum above lo / M.
inline MatrixXd random_pihat(RngStream& rng, Eigen::Index n, int m, double lo = 0.1) {
  MatrixXd pihat(n, m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) pihat(i, j) = rng.uniform(lo, 1.0);
  pihat.array().colwise() /= pihat.rowwise().sum().array();
  return pihat;
}

inline OmgpConfig basic_config(std::vector<KernelSpec> kernels, double noise) {
  OmgpConfig config;
  config.num_components = static_cast<int>(kernels.size());
  config.kernels = std::move(kernels);
  config.noise_variance = noise;
  return config;
}

/// Gram matrix as the library factors it: the kernel plus its sized jitter.
inline MatrixXd jittered_gram(const KernelSpec& kernel, const MatrixXd& inputs) {
  MatrixXd k = gram(kernel, inputs);
  k.diagonal().array() += jitter_for(kernel);
  return k;
}

/// log N(y_d | 0, C) summed over the columns of Y, through a dense LDLT:
/// deliberately avoids the library's triangular-solve pipeline.
inline double dense_log_gauss(const MatrixXd& c, const MatrixXd& y) {
  Eigen::LDLT<MatrixXd> ldlt(c);
  const MatrixXd solved = ldlt.solve(y);
  const double quad = (y.array() * solved.array()).sum();
  const double logdet = ldlt.vectorD().array().log().sum();
  const double n = static_cast<double>(y.rows());
  const double d = static_cast<double>(y.cols());
  return -0.5 * quad - 0.5 * d * logdet - 0.5 * n * d * kLog2Pi;
}

struct DensePosterior {
  MatrixXd mean;
  MatrixXd covariance;
};

/// Sigma = (K^{-1} + B)^{-1} and mu_d = Sigma B y_d with explicit dense
/// inverses; the formula the triangular-solve implementation must reproduce.
inline DensePosterior dense_posterior(const MatrixXd& k, const VectorXd& b_diag,
                                      const MatrixXd& y) {
  const MatrixXd precision = k.inverse() + MatrixXd(b_diag.asDiagonal());
  DensePosterior post;
  post.covariance = precision.inverse();
  post.mean = post.covariance * b_diag.asDiagonal() * y;
  return post;
}

inline double kl_categorical(const MatrixXd& pihat, const MatrixXd& prior) {
  double kl = 0.0;
  for (Eigen::Index i = 0; i < pihat.rows(); ++i)
    for (Eigen::Index j = 0; j < pihat.cols(); ++j)
      if (pihat(i, j) > 0.0) kl += pihat(i, j) * std::log(pihat(i, j) / prior(i, j));
  return kl;
}

/// KL-corrected bound through dense algebra: per component the collapsed
/// evidence log N(y_d | 0, K + B^{-1}) plus the responsibility-weighted
/// normalizer (N D/2) log 2pi - (D/2) log|B| - (D/2) log(2 pi sigma^2) sum
/// pihat, minus the categorical KL.
inline double dense_lkl(const DataSet& data, const MatrixXd& pihat,
                        const OmgpConfig& config) {
  const double n = static_cast<double>(data.num_samples());
  const double d = static_cast<double>(data.output_dim());
  const MatrixXd prior =
      config.prior.materialize(data.num_samples(), config.num_components);
  double value = 0.0;
  for (int m = 0; m < config.num_components; ++m) {
    const double sigma2 = config.noise_for(m);
    const MatrixXd k = jittered_gram(config.kernels[static_cast<size_t>(m)], data.inputs);
    const VectorXd b = pihat.col(m) / sigma2;
    const MatrixXd c = k + MatrixXd(b.cwiseInverse().asDiagonal());
    value += dense_log_gauss(c, data.outputs);
    value += 0.5 * n * d * kLog2Pi;
    value -= 0.5 * d * b.array().log().sum();
    value -= 0.5 * d * std::log(2.0 * 3.14159265358979323846 * sigma2) * pihat.col(m).sum();
  }
  return value - kl_categorical(pihat, prior);
}

struct DensePrediction {
  MatrixXd mean;   // N* x D
  VectorXd variance;  // N*
};

/// Predictive mean k_*^T (K + B^{-1})^{-1} Y and variance sigma^2 + k_** -
/// k_*^T (K + B^{-1})^{-1} k_* for one component, with a dense inverse.
inline DensePrediction dense_predict(const DataSet& data, const VectorXd& pihat_col,
                                     const KernelSpec& kernel, double sigma2,
                                     const MatrixXd& test_inputs) {
  const MatrixXd k = jittered_gram(kernel, data.inputs);
  const VectorXd b = pihat_col / sigma2;
  const MatrixXd c_inv =
      (k + MatrixXd(b.cwiseInverse().asDiagonal())).inverse();
  const MatrixXd k_star = gram(kernel, data.inputs, test_inputs);  // N x N*
  DensePrediction pred;
  pred.mean = k_star.transpose() * c_inv * data.outputs;
  pred.variance.resize(test_inputs.rows());
  for (Eigen::Index j = 0; j < test_inputs.rows(); ++j)
    pred.variance(j) =
        sigma2 + kernel.amplitude() - k_star.col(j).dot(c_inv * k_star.col(j));
  return pred;
}

/// Central finite differences of bound_lkl over the packed log
/// hyperparameters.
inline VectorXd fd_lkl_gradient(const DataSet& data, const Responsibilities& resp,
                                const OmgpConfig& config, double step = 1e-5) {
  const VectorXd x0 = pack_log_hyperparameters(config);
  VectorXd grad(x0.size());
  for (Eigen::Index i = 0; i < x0.size(); ++i) {
    OmgpConfig plus = config, minus = config;
    VectorXd x = x0;
    x(i) = x0(i) + step;
    unpack_log_hyperparameters(x, plus);
    x(i) = x0(i) - step;
    unpack_log_hyperparameters(x, minus);
    grad(i) = (bound_lkl(data, resp, plus) - bound_lkl(data, resp, minus)) / (2.0 * step);
  }
  return grad;
}

/// Model assembled around an externally supplied responsibility matrix, with
/// zero target means so predictions compare directly against raw-output
/// oracles.
inline OmgpModel make_model(const DataSet& data, const MatrixXd& pihat,
                            const OmgpConfig& config) {
  OmgpModel model;
  model.config = config;
  model.kernels = config.kernels;
  if (config.per_component_noise) {
    model.noise_variances.resize(config.num_components);
    for (int m = 0; m < config.num_components; ++m)
      model.noise_variances(m) = config.noise_for(m);
  } else {
    model.noise_variances = VectorXd::Constant(1, config.noise_variance);
  }
  model.data = data;
  model.target_means = Eigen::RowVectorXd::Zero(data.output_dim());
  model.target_scales = Eigen::RowVectorXd::Ones(data.output_dim());
  model.responsibilities = Responsibilities{pihat};
  model.posterior = m_step_posterior(data, model.responsibilities, config);
  return model;
}

}  // namespace omgp::test

#endif
