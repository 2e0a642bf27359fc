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

#include <cmath>

#include "doctest.h"
#include "gp.hpp"
#include "testutil.hpp"

using namespace omgp;

namespace {

DataSet one_sample(double x, double y) {
  DataSet data;
  data.inputs.resize(1, 1);
  data.inputs << x;
  data.outputs.resize(1, 1);
  data.outputs << y;
  return data;
}

}  // namespace

TEST_CASE("single-sample factor is sqrt of signal power plus noise") {
  const KernelSpec kernel = KernelSpec::se_ard(2.0, {1.0});
  const GpFit fit = gp_fit(one_sample(0.4, 3.0), kernel, 0.1);
  CHECK(fit.chol_factor.rows() == 1);
  CHECK(fit.chol_factor(0, 0) ==
        doctest::Approx(std::sqrt(2.0 + 0.1)).epsilon(1e-6));
}

TEST_CASE("cholesky factor reconstructs the factored matrix") {
  RngStream rng(3, 0);
  const DataSet data = test::smooth_dataset(rng, 10, 2, 1);
  const KernelSpec kernel = test::random_se(rng, 2);
  const double noise = 0.2;
  const GpFit fit = gp_fit(data, kernel, noise);
  MatrixXd expected = test::jittered_gram(kernel, data.inputs);
  expected.diagonal().array() += noise;
  const MatrixXd reconstructed = fit.chol_factor * fit.chol_factor.transpose();
  CHECK(test::rel_diff(reconstructed, expected) < 1e-10);
}

TEST_CASE("duplicate inputs with a white-noise kernel still factor") {
  DataSet data;
  data.inputs.resize(4, 1);
  data.inputs << 1.0, 1.0, 2.0, 2.0;
  data.outputs.resize(4, 1);
  data.outputs << 0.5, 0.7, -0.1, 0.2;
  const GpFit fit = gp_fit(data, KernelSpec::white_noise(0.5), 0.05);
  CHECK(fit.chol_factor.allFinite());
}

TEST_CASE("targets are mean-centered per output dimension") {
  RngStream rng(9, 0);
  const DataSet data = test::smooth_dataset(rng, 8, 1, 3);
  const GpFit fit = gp_fit(data, KernelSpec::se_ard(1.0, {1.0}), 0.1);
  CHECK(fit.centered_targets.colwise().mean().norm() < 1e-12);
  CHECK(test::rel_diff(MatrixXd(fit.centered_targets.rowwise() + fit.target_means),
                       data.outputs) < 1e-14);
}

TEST_CASE("prediction reverts to the prior far from the data") {
  RngStream rng(4, 0);
  const DataSet data = test::smooth_dataset(rng, 12, 1, 2);
  const KernelSpec kernel = KernelSpec::se_ard(1.3, {0.8});
  const GpFit fit = gp_fit(data, kernel, 0.2);
  MatrixXd far(1, 1);
  far << 500.0;
  const GpPrediction pred = gp_predict(fit, far);
  CHECK((pred.means.row(0) - fit.target_means).norm() < 1e-9);
  CHECK(pred.variances(0) == doctest::Approx(0.2 + 1.3).epsilon(1e-12));
}

TEST_CASE("near-zero noise interpolates the training targets") {
  RngStream rng(6, 0);
  const DataSet data = test::smooth_dataset(rng, 9, 1, 1);
  const GpFit fit = gp_fit(data, KernelSpec::se_ard(1.0, {1.0}), 1e-10);
  const GpPrediction pred = gp_predict(fit, data.inputs);
  CHECK((pred.means - data.outputs).cwiseAbs().maxCoeff() < 1e-4);
}

TEST_CASE("single-sample prediction follows the scalar closed form") {
  const double y = 3.0;
  const GpFit fit = gp_fit(one_sample(0.4, y), KernelSpec::se_ard(2.0, {1.0}), 0.5);
  MatrixXd at_train(1, 1);
  at_train << 0.4;
  // The single target centers to zero, so the shrinkage acts on zero and the
  // stored mean y comes back exactly.
  const GpPrediction pred = gp_predict(fit, at_train);
  CHECK(pred.means(0, 0) == doctest::Approx(y).epsilon(1e-12));

  // A two-point antisymmetric set keeps the centered targets nonzero, so the
  // factor k11 / (k11 + sigma^2) is visible: the points are far apart and
  // each prediction shrinks its own target toward the (zero) mean.
  DataSet pair;
  pair.inputs.resize(2, 1);
  pair.inputs << -200.0, 200.0;
  pair.outputs.resize(2, 1);
  pair.outputs << 1.0, -1.0;
  const double sp = 2.0, noise = 0.5;
  const GpFit pair_fit = gp_fit(pair, KernelSpec::se_ard(sp, {1.0}), noise);
  const GpPrediction shrunk = gp_predict(pair_fit, pair.inputs);
  CHECK(shrunk.means(0, 0) == doctest::Approx(sp / (sp + noise) * 1.0).epsilon(1e-6));
  CHECK(shrunk.means(1, 0) == doctest::Approx(sp / (sp + noise) * -1.0).epsilon(1e-6));
}

TEST_CASE("variance never falls below the noise floor") {
  RngStream rng(8, 0);
  const DataSet data = test::smooth_dataset(rng, 15, 2, 1);
  const GpFit fit = gp_fit(data, test::random_se(rng, 2), 0.3);
  MatrixXd grid(20, 2);
  for (Eigen::Index i = 0; i < grid.size(); ++i) grid(i) = rng.uniform(-3.0, 3.0);
  const GpPrediction pred = gp_predict(fit, grid);
  CHECK((pred.variances.array() >= 0.3 - 1e-10).all());
}

TEST_CASE("predictive variance shrinks as nearby points accumulate") {
  // 1-D grids growing around the probe point: variance at the probe must be
  // monotonically non-increasing.
  const KernelSpec kernel = KernelSpec::se_ard(1.0, {0.5});
  MatrixXd probe(1, 1);
  probe << 0.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 8; ++n) {
    DataSet data;
    data.inputs.resize(n, 1);
    data.outputs.resize(n, 1);
    for (int i = 0; i < n; ++i) {
      data.inputs(i, 0) = -1.0 + 2.0 * static_cast<double>(i) / 8.0;
      data.outputs(i, 0) = std::sin(data.inputs(i, 0));
    }
    const GpPrediction pred = gp_predict(gp_fit(data, kernel, 0.1), probe);
    CHECK(pred.variances(0) <= previous + 1e-12);
    previous = pred.variances(0);
  }
}

TEST_CASE("single-sample evidence at zero target is the scalar log normal") {
  const GpFit fit = gp_fit(one_sample(1.0, 0.0), KernelSpec::se_ard(2.0, {1.0}), 0.5);
  CHECK(gp_log_evidence(fit) ==
        doctest::Approx(-0.5 * std::log(2.0 * 3.14159265358979323846 * (2.0 + 0.5)))
            .epsilon(1e-6));
}

TEST_CASE("zero targets zero out the quadratic term") {
  DataSet data;
  data.inputs.resize(3, 1);
  data.inputs << 0.0, 1.0, 2.0;
  data.outputs = MatrixXd::Zero(3, 2);
  const KernelSpec kernel = KernelSpec::se_ard(1.0, {1.0});
  const double noise = 0.2;
  const GpFit fit = gp_fit(data, kernel, noise);
  MatrixXd c = test::jittered_gram(kernel, data.inputs);
  c.diagonal().array() += noise;
  const double expected = -0.5 * 2.0 * std::log(c.determinant()) -
                          0.5 * 6.0 * test::kLog2Pi;
  CHECK(gp_log_evidence(fit) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("evidence matches the dense oracle on random instances") {
  RngStream rng(12, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(19));  // up to 20
    const Eigen::Index p = 1 + static_cast<Eigen::Index>(rng.below(3));
    const Eigen::Index d = 1 + static_cast<Eigen::Index>(rng.below(2));
    const DataSet data = test::smooth_dataset(rng, n, p, d);
    const KernelSpec kernel = test::random_se(rng, p);
    const double noise = rng.uniform(0.05, 0.5);
    const GpFit fit = gp_fit(data, kernel, noise);

    MatrixXd c = test::jittered_gram(kernel, data.inputs);
    c.diagonal().array() += noise;
    const double oracle = test::dense_log_gauss(c, fit.centered_targets);
    CHECK(test::rel_diff(gp_log_evidence(fit), oracle) < 1e-9);
  }
}

TEST_CASE("fit rejects invalid arguments") {
  DataSet data;
  data.inputs = MatrixXd::Zero(0, 1);
  data.outputs = MatrixXd::Zero(0, 1);
  CHECK_THROWS_AS(gp_fit(data, KernelSpec::se_ard(1.0, {1.0}), 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gp_fit(one_sample(0.0, 1.0), KernelSpec::se_ard(1.0, {1.0}), 0.0),
                  std::invalid_argument);
  const GpFit fit = gp_fit(one_sample(0.0, 1.0), KernelSpec::se_ard(1.0, {1.0}), 0.1);
  CHECK_THROWS_AS(gp_predict(fit, MatrixXd::Zero(1, 2)), std::invalid_argument);
}
