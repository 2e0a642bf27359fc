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

#ifndef OMGP_TYPES_HPP
#define OMGP_TYPES_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace omgp {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using Eigen::VectorXi;

/// Numerical failure (e.g. a Cholesky factorization that did not succeed
/// even after jitter escalation).
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// I/O or parse failure, carrying a human-readable location.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// N samples: inputs are N x P, outputs N x D. Labels, when present,
/// identify the generating source of each sample.
struct DataSet {
  MatrixXd inputs;   // N x P
  MatrixXd outputs;  // N x D
  std::optional<VectorXi> labels;

  Eigen::Index num_samples() const { return inputs.rows(); }
  Eigen::Index input_dim() const { return inputs.cols(); }
  Eigen::Index output_dim() const { return outputs.cols(); }

  void validate() const {
    if (inputs.rows() != outputs.rows())
      throw std::invalid_argument("DataSet: inputs and outputs disagree on N");
    if (labels && labels->size() != inputs.rows())
      throw std::invalid_argument("DataSet: label vector length != N");
    if (!inputs.allFinite() || !outputs.allFinite())
      throw std::invalid_argument("DataSet: non-finite values");
  }
};

/// A generated or loaded experiment: a data set plus the bookkeeping needed
/// to score a fit against it.
struct Scenario {
  std::string name;
  DataSet data;
  std::optional<MatrixXd> noiseless_outputs;  // N x D, measurement-noise free
  std::uint64_t rng_seed = 0;
};

/// Constant-velocity state-space model in 3-D: state [X,Y,Z,Vx,Vy,Vz],
/// range/azimuth/elevation measurements.
struct StateSpaceParams {
  double sampling_interval = 1.0;                    // seconds
  Eigen::Matrix3d process_noise;                     // Q
  Eigen::Matrix3d measurement_noise;                 // R
  std::vector<Eigen::Matrix<double, 6, 1>> initial_states;
  int num_steps = 30;

  StateSpaceParams() {
    process_noise = 0.1 * Eigen::Matrix3d::Identity();
    measurement_noise = Eigen::Vector3d(50.0 * 50.0, 0.005 * 0.005, 0.005 * 0.005).asDiagonal();
    initial_states = {
        (Eigen::Matrix<double, 6, 1>() << 6500.0, -1000.0, 2000.0, -50.0, 100.0, 0.0).finished(),
        (Eigen::Matrix<double, 6, 1>() << 5050.0, -450.0, 2000.0, 100.0, 50.0, 0.0).finished(),
        (Eigen::Matrix<double, 6, 1>() << 8000.0, 500.0, 2000.0, -100.0, 0.0, 0.0).finished(),
    };
  }
};

}  // namespace omgp

#endif
