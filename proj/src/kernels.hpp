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

#ifndef OMGP_KERNELS_HPP
#define OMGP_KERNELS_HPP

#include <string>
#include <vector>

#include "types.hpp"

namespace omgp {

enum class KernelFamily { SquaredExponentialArd, WhiteNoise };

std::string to_string(KernelFamily family);
KernelFamily kernel_family_from_string(const std::string& name);

/// Covariance function plus its hyperparameters.
///
/// SE-ARD: k(a,b) = signal_power * exp(-1/2 sum_j (a_j-b_j)^2 / length_scales[j]),
/// where length_scales holds the diagonal of the (squared) length-scale
/// matrix, one entry per input dimension.
///
/// WhiteNoise: k(a,b) = noise_level * [a == b], with bitwise-exact coordinate
/// equality; it only couples observations taken at identical inputs.
///
/// All hyperparameters are strictly positive and are optimized in log space;
/// gradients are taken with respect to the log of each stored value.
struct KernelSpec {
  KernelFamily family = KernelFamily::SquaredExponentialArd;
  double signal_power = 1.0;          // sigma_0^2, SE-ARD only
  std::vector<double> length_scales;  // Lambda diagonal, SE-ARD only
  double noise_level = 1.0;           // b^2, WhiteNoise only

  static KernelSpec se_ard(double signal_power, std::vector<double> length_scales);
  static KernelSpec white_noise(double noise_level);

  /// Number of log-hyperparameters exposed to the optimizer.
  int num_hyperparameters() const;

  /// Flat view of the hyperparameters (SE-ARD: [signal_power, length_scales...];
  /// WhiteNoise: [noise_level]).
  std::vector<double> hyperparameters() const;
  void set_hyperparameters(const std::vector<double>& values);

  /// Output-scale of the kernel (sigma_0^2 or b^2); jitter is sized from it.
  double amplitude() const;

  void validate(Eigen::Index input_dim) const;
};

/// Diagonal jitter added to self-Gram matrices before factorization, sized
/// relative to the kernel amplitude.
inline double jitter_for(const KernelSpec& spec) { return 1e-8 * spec.amplitude(); }

/// Gram matrix between two input sets: entry (i,j) = k(a_i, b_j).
MatrixXd gram(const KernelSpec& spec, const MatrixXd& a, const MatrixXd& b);

/// Self-paired Gram matrix (symmetric).
inline MatrixXd gram(const KernelSpec& spec, const MatrixXd& a) { return gram(spec, a, a); }

/// Derivative of the self-paired Gram matrix with respect to the log of
/// hyperparameter `hyper_index` (indexing as in hyperparameters()).
MatrixXd gram_gradient(const KernelSpec& spec, const MatrixXd& a, int hyper_index);

}  // namespace omgp

#endif
