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

#include "prediction.hpp"

#include <cmath>

#include "csv.hpp"
#include "kernels.hpp"

namespace omgp {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void MixturePrediction::validate() const {
  const int m = num_components();
  if (component_weights.size() != m || static_cast<int>(variances.size()) != m)
    throw std::invalid_argument("prediction: component count mismatch across fields");
  if (std::abs(component_weights.sum() - 1.0) > 1e-12)
    throw std::invalid_argument("prediction: weights must sum to one");
  for (int i = 0; i < m; ++i)
    if (means[static_cast<size_t>(i)].rows() != num_points() ||
        variances[static_cast<size_t>(i)].size() != num_points())
      throw std::invalid_argument("prediction: per-component shapes disagree with test inputs");
  if (output_scales.size() != 0 && output_scales.size() != output_dim())
    throw std::invalid_argument("prediction: output_scales length disagrees with output dim");
}

MixturePrediction predict(const OmgpModel& model, const MatrixXd& test_inputs) {
  if (test_inputs.cols() != model.data.input_dim())
    throw std::invalid_argument("predict: test input dimension disagrees with the model");
  if (!test_inputs.allFinite())
    throw std::invalid_argument("predict: non-finite test inputs");
  const int num_components = model.num_components();
  if (model.posterior.num_components() != num_components)
    throw std::invalid_argument("predict: model has no fitted posterior");

  const DataSet centered_set = model.centered_data();
  const MatrixXd& centered = centered_set.outputs;
  const Eigen::RowVectorXd scales =
      model.target_scales.size() == model.data.output_dim()
          ? model.target_scales
          : Eigen::RowVectorXd::Ones(model.data.output_dim());

  MixturePrediction pred;
  pred.test_inputs = test_inputs;
  pred.output_scales = scales;
  if (model.config.prior.is_uniform()) {
    pred.component_weights =
        VectorXd::Constant(num_components, 1.0 / static_cast<double>(num_components));
  } else {
    // Constant mixing factors for new inputs: the average prior mass each
    // component carries over the training set.
    pred.component_weights = model.config.prior.matrix->colwise().mean();
  }

  for (int m = 0; m < num_components; ++m) {
    const KernelSpec& kernel = model.kernels[static_cast<size_t>(m)];
    const double sigma2 = model.noise_for(m);
    const ComponentPosterior& comp = model.posterior.components[static_cast<size_t>(m)];
    const VectorXd sqrt_b = comp.precision_diagonal.array().sqrt();
    const auto lower = comp.chol_factor.transpose().triangularView<Eigen::Lower>();
    const auto upper = comp.chol_factor.triangularView<Eigen::Upper>();

    const MatrixXd k_star = gram(kernel, model.data.inputs, test_inputs);  // N x N*
    const MatrixXd u = upper.solve(lower.solve(sqrt_b.asDiagonal() * centered));
    MatrixXd mean = k_star.transpose() * (sqrt_b.asDiagonal() * u);
    mean.array().rowwise() *= scales.array();
    mean.rowwise() += model.target_means;

    const MatrixXd half = lower.solve(sqrt_b.asDiagonal() * k_star);  // R^T \ (B^1/2 k_*)
    VectorXd variance(test_inputs.rows());
    for (Eigen::Index j = 0; j < test_inputs.rows(); ++j)
      variance(j) =
          sigma2 + std::max(kernel.amplitude() - half.col(j).squaredNorm(), 0.0);

    pred.means.push_back(std::move(mean));
    pred.variances.push_back(std::move(variance));
  }
  return pred;
}

double predictive_density(const MixturePrediction& prediction, const VectorXd& y_star,
                          Eigen::Index point_index) {
  if (point_index < 0 || point_index >= prediction.num_points())
    throw std::invalid_argument("predictive_density: point index out of range");
  if (y_star.size() != prediction.output_dim())
    throw std::invalid_argument("predictive_density: output dimension mismatch");
  const double d = static_cast<double>(y_star.size());
  const Eigen::RowVectorXd scales = prediction.output_scales.size() == y_star.size()
                                        ? prediction.output_scales
                                        : Eigen::RowVectorXd::Ones(y_star.size());
  // In original units dimension j carries variance v * scales(j)^2, so the
  // quadratic form uses scaled residuals and the normalizer picks up the
  // product of scales.
  const double log_scales = scales.array().log().sum();
  double density = 0.0;
  for (int m = 0; m < prediction.num_components(); ++m) {
    const double variance = prediction.variances[static_cast<size_t>(m)](point_index);
    const double sq =
        ((y_star.transpose() - prediction.means[static_cast<size_t>(m)].row(point_index))
             .array() /
         scales.array())
            .square()
            .sum();
    density += prediction.component_weights(m) *
               std::exp(-0.5 * sq / variance - 0.5 * d * std::log(kTwoPi * variance) -
                        log_scales);
  }
  return density;
}

VectorXi associate(const OmgpModel& model) {
  const MatrixXd& pihat = model.responsibilities.matrix;
  VectorXi labels(pihat.rows());
  for (Eigen::Index i = 0; i < pihat.rows(); ++i) {
    int best = 0;
    for (int m = 1; m < static_cast<int>(pihat.cols()); ++m)
      if (pihat(i, m) > pihat(i, best)) best = m;  // strict: ties keep the lower index
    labels(i) = best;
  }
  return labels;
}

void save_prediction_csv(const MixturePrediction& prediction, const std::string& path) {
  prediction.validate();
  const Eigen::Index p = prediction.test_inputs.cols();
  const Eigen::Index d = prediction.output_dim();
  std::vector<std::string> header;
  for (Eigen::Index j = 0; j < p; ++j) header.push_back("in_" + std::to_string(j));
  header.emplace_back("component");
  for (Eigen::Index j = 0; j < d; ++j) header.push_back("mean_" + std::to_string(j + 1));
  header.emplace_back("variance");
  header.emplace_back("weight");

  MatrixXd rows(prediction.num_points() * prediction.num_components(),
                p + 1 + d + 2);
  Eigen::Index at = 0;
  for (Eigen::Index i = 0; i < prediction.num_points(); ++i) {
    for (int m = 0; m < prediction.num_components(); ++m, ++at) {
      rows.block(at, 0, 1, p) = prediction.test_inputs.row(i);
      rows(at, p) = m;
      rows.block(at, p + 1, 1, d) = prediction.means[static_cast<size_t>(m)].row(i);
      rows(at, p + 1 + d) = prediction.variances[static_cast<size_t>(m)](i);
      rows(at, p + 2 + d) = prediction.component_weights(m);
    }
  }
  write_csv_table(path, header, rows);
}

void save_labels_csv(const OmgpModel& model, const std::string& path) {
  const VectorXi labels = associate(model);
  const MatrixXd& pihat = model.responsibilities.matrix;
  MatrixXd rows(labels.size(), 3);
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    rows(i, 0) = static_cast<double>(i);
    rows(i, 1) = static_cast<double>(labels(i));
    rows(i, 2) = pihat(i, labels(i));
  }
  write_csv_table(path, {"row", "label", "max_responsibility"}, rows);
}

}  // namespace omgp
