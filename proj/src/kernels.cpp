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

#include "kernels.hpp"

#include <cmath>

namespace omgp {

std::string to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::SquaredExponentialArd: return "se_ard";
    case KernelFamily::WhiteNoise: return "white_noise";
  }
  return "unknown";
}

KernelFamily kernel_family_from_string(const std::string& name) {
  if (name == "se_ard") return KernelFamily::SquaredExponentialArd;
  if (name == "white_noise" || name == "white") return KernelFamily::WhiteNoise;
  throw std::invalid_argument("unknown kernel family: '" + name + "'");
}

KernelSpec KernelSpec::se_ard(double signal_power, std::vector<double> length_scales) {
  KernelSpec spec;
  spec.family = KernelFamily::SquaredExponentialArd;
  spec.signal_power = signal_power;
  spec.length_scales = std::move(length_scales);
  return spec;
}

KernelSpec KernelSpec::white_noise(double noise_level) {
  KernelSpec spec;
  spec.family = KernelFamily::WhiteNoise;
  spec.noise_level = noise_level;
  return spec;
}

int KernelSpec::num_hyperparameters() const {
  return family == KernelFamily::SquaredExponentialArd
             ? 1 + static_cast<int>(length_scales.size())
             : 1;
}

std::vector<double> KernelSpec::hyperparameters() const {
  if (family == KernelFamily::WhiteNoise) return {noise_level};
  std::vector<double> values;
  values.reserve(1 + length_scales.size());
  values.push_back(signal_power);
  values.insert(values.end(), length_scales.begin(), length_scales.end());
  return values;
}

void KernelSpec::set_hyperparameters(const std::vector<double>& values) {
  if (static_cast<int>(values.size()) != num_hyperparameters())
    throw std::invalid_argument("KernelSpec: wrong hyperparameter count");
  if (family == KernelFamily::WhiteNoise) {
    noise_level = values[0];
    return;
  }
  signal_power = values[0];
  std::copy(values.begin() + 1, values.end(), length_scales.begin());
}

double KernelSpec::amplitude() const {
  return family == KernelFamily::SquaredExponentialArd ? signal_power : noise_level;
}

void KernelSpec::validate(Eigen::Index input_dim) const {
  if (family == KernelFamily::SquaredExponentialArd) {
    if (!(signal_power > 0.0) || !std::isfinite(signal_power))
      throw std::invalid_argument("KernelSpec: signal_power must be positive");
    if (static_cast<Eigen::Index>(length_scales.size()) != input_dim)
      throw std::invalid_argument("KernelSpec: need one length-scale per input dimension");
    for (double ls : length_scales)
      if (!(ls > 0.0) || !std::isfinite(ls))
        throw std::invalid_argument("KernelSpec: length-scales must be positive");
  } else {
    if (!(noise_level > 0.0) || !std::isfinite(noise_level))
      throw std::invalid_argument("KernelSpec: noise_level must be positive");
  }
}

namespace {

void check_inputs(const KernelSpec& spec, const MatrixXd& a, const MatrixXd& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("gram: input sets disagree on dimensionality");
  spec.validate(a.cols());
  if (!a.allFinite() || !b.allFinite())
    throw std::invalid_argument("gram: non-finite input coordinates");
}

}  // namespace

MatrixXd gram(const KernelSpec& spec, const MatrixXd& a, const MatrixXd& b) {
  check_inputs(spec, a, b);
  const Eigen::Index n = a.rows(), m = b.rows();
  MatrixXd k(n, m);

  if (spec.family == KernelFamily::WhiteNoise) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < m; ++j)
        k(i, j) = (a.row(i).array() == b.row(j).array()).all() ? spec.noise_level : 0.0;
    return k;
  }

  // SE-ARD via scaled inputs: k = s0 * exp(-1/2 ||a' - b'||^2) with
  // a' = a / sqrt(Lambda).
  Eigen::RowVectorXd inv_sqrt(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    inv_sqrt(j) = 1.0 / std::sqrt(spec.length_scales[static_cast<size_t>(j)]);
  const MatrixXd as = a.array().rowwise() * inv_sqrt.array();
  const MatrixXd bs = b.array().rowwise() * inv_sqrt.array();

  const VectorXd a2 = as.rowwise().squaredNorm();
  const VectorXd b2 = bs.rowwise().squaredNorm();
  k.noalias() = -2.0 * as * bs.transpose();
  k.colwise() += a2;
  k.rowwise() += b2.transpose();
  // Rounding can push squared distances a hair below zero.
  k = (spec.signal_power * (-0.5 * k.array().max(0.0)).exp()).matrix();
  return k;
}

MatrixXd gram_gradient(const KernelSpec& spec, const MatrixXd& a, int hyper_index) {
  check_inputs(spec, a, a);
  if (hyper_index < 0 || hyper_index >= spec.num_hyperparameters())
    throw std::invalid_argument("gram_gradient: hyper_index out of range");

  const MatrixXd k = gram(spec, a, a);
  if (hyper_index == 0) return k;  // d k / d log(amplitude) = k for both families

  // d k / d log(Lambda_j) = k * (a_ij - a_i'j)^2 / (2 Lambda_j)
  const Eigen::Index j = hyper_index - 1;
  const double lambda = spec.length_scales[static_cast<size_t>(j)];
  const VectorXd col = a.col(j);
  const Eigen::Index n = a.rows();
  MatrixXd grad(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      const double d = col(r) - col(c);
      grad(r, c) = k(r, c) * d * d / (2.0 * lambda);
    }
  return grad;
}

}  // namespace omgp
