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
#include "kernels.hpp"
#include "testutil.hpp"

using namespace omgp;

TEST_CASE("se_ard at zero distance returns the signal power") {
  const KernelSpec spec = KernelSpec::se_ard(2.0, {1.0, 1.0});
  MatrixXd a(1, 2);
  a << 0.3, -0.7;
  CHECK(gram(spec, a)(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("se_ard at unit distance with unit parameters gives exp(-1/2)") {
  const KernelSpec spec = KernelSpec::se_ard(1.0, {1.0});
  MatrixXd a(1, 1), b(1, 1);
  a << 0.0;
  b << 1.0;
  CHECK(gram(spec, a, b)(0, 0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("white noise couples only bitwise-identical inputs") {
  const KernelSpec spec = KernelSpec::white_noise(0.3);
  MatrixXd a(3, 1);
  a << 1.5, std::nextafter(1.5, 2.0), 1.5;
  const MatrixXd k = gram(spec, a);
  CHECK(k(0, 0) == 0.3);
  CHECK(k(1, 1) == 0.3);
  CHECK(k(0, 1) == 0.0);
  CHECK(k(1, 0) == 0.0);
  CHECK(k(0, 2) == 0.3);  // duplicated coordinates do couple
}

TEST_CASE("se_ard entries stay within (0, signal_power]") {
  RngStream rng(11, 0);
  const KernelSpec spec = KernelSpec::se_ard(1.7, {0.8, 1.3, 0.5});
  MatrixXd a(12, 3);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = rng.uniform(-3.0, 3.0);
  const MatrixXd k = gram(spec, a);
  CHECK((k.array() > 0.0).all());
  CHECK((k.array() <= 1.7 + 1e-15).all());
}

TEST_CASE("self gram matrices are positive semidefinite") {
  RngStream rng(5, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 5 + static_cast<Eigen::Index>(rng.below(46));  // up to 50
    const Eigen::Index p = 1 + static_cast<Eigen::Index>(rng.below(3));
    MatrixXd a(n, p);
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = rng.uniform(-2.0, 2.0);
    const KernelSpec spec =
        trial % 3 == 0 ? KernelSpec::white_noise(rng.uniform(0.2, 2.0))
                       : test::random_se(rng, p);
    const MatrixXd k = gram(spec, a);
    CHECK(test::rel_diff(k, MatrixXd(k.transpose())) < 1e-14);
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(k);
    CHECK(eig.eigenvalues().minCoeff() >= -1e-10 * k.trace());
  }
}

TEST_CASE("gradient with respect to log signal power is the gram matrix itself") {
  RngStream rng(7, 0);
  const KernelSpec spec = KernelSpec::se_ard(1.4, {0.9, 2.0});
  MatrixXd a(6, 2);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = rng.uniform(-2.0, 2.0);
  CHECK(test::rel_diff(gram_gradient(spec, a, 0), gram(spec, a)) < 1e-14);
}

TEST_CASE("length-scale gradient closed form at squared distance 2") {
  // d k / d log l^2 = k * d^2 / (2 l^2); with the unit kernel and d^2 = 2 the
  // entry is exp(-1) * 1.
  const KernelSpec spec = KernelSpec::se_ard(1.0, {1.0});
  MatrixXd a(2, 1);
  a << 0.0, std::sqrt(2.0);
  const MatrixXd g = gram_gradient(spec, a, 1);
  CHECK(g(0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(g(0, 0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("gram gradients match central finite differences") {
  RngStream rng(23, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 3 + static_cast<Eigen::Index>(rng.below(6));
    const Eigen::Index p = 1 + static_cast<Eigen::Index>(rng.below(3));
    MatrixXd a(n, p);
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = rng.uniform(-2.0, 2.0);
    KernelSpec spec = trial % 4 == 0 ? KernelSpec::white_noise(rng.uniform(0.3, 2.0))
                                     : test::random_se(rng, p);
    const double step = 1e-5;
    for (int h = 0; h < spec.num_hyperparameters(); ++h) {
      const MatrixXd analytic = gram_gradient(spec, a, h);
      std::vector<double> hypers = spec.hyperparameters();
      KernelSpec plus = spec, minus = spec;
      std::vector<double> shifted = hypers;
      shifted[static_cast<size_t>(h)] = std::exp(std::log(hypers[static_cast<size_t>(h)]) + step);
      plus.set_hyperparameters(shifted);
      shifted[static_cast<size_t>(h)] = std::exp(std::log(hypers[static_cast<size_t>(h)]) - step);
      minus.set_hyperparameters(shifted);
      const MatrixXd fd = (gram(plus, a) - gram(minus, a)) / (2.0 * step);
      CHECK(test::rel_diff(analytic, fd) < 1e-4);
    }
  }
}

TEST_CASE("hyperparameter round trip and counts") {
  KernelSpec se = KernelSpec::se_ard(1.5, {0.7, 0.9});
  CHECK(se.num_hyperparameters() == 3);
  auto values = se.hyperparameters();
  CHECK(values.size() == 3);
  values[0] = 2.5;
  values[2] = 0.4;
  se.set_hyperparameters(values);
  CHECK(se.signal_power == 2.5);
  CHECK(se.length_scales[1] == 0.4);
  CHECK(se.amplitude() == 2.5);

  KernelSpec white = KernelSpec::white_noise(0.6);
  CHECK(white.num_hyperparameters() == 1);
  CHECK(white.amplitude() == 0.6);
  CHECK_THROWS_AS(white.set_hyperparameters({1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("kernel validation rejects degenerate hyperparameters") {
  CHECK_THROWS_AS(KernelSpec::se_ard(-1.0, {1.0}).validate(1), std::invalid_argument);
  CHECK_THROWS_AS(KernelSpec::se_ard(1.0, {0.0}).validate(1), std::invalid_argument);
  CHECK_THROWS_AS(KernelSpec::se_ard(1.0, {1.0}).validate(2), std::invalid_argument);
  CHECK_THROWS_AS(KernelSpec::white_noise(0.0).validate(1), std::invalid_argument);
  MatrixXd bad(1, 1);
  bad << std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(gram(KernelSpec::se_ard(1.0, {1.0}), bad), std::invalid_argument);
}

TEST_CASE("kernel family names round trip") {
  CHECK(to_string(KernelFamily::SquaredExponentialArd) == "se_ard");
  CHECK(to_string(KernelFamily::WhiteNoise) == "white_noise");
  CHECK(kernel_family_from_string("se_ard") == KernelFamily::SquaredExponentialArd);
  CHECK(kernel_family_from_string("white_noise") == KernelFamily::WhiteNoise);
  CHECK_THROWS_AS(kernel_family_from_string("matern"), std::invalid_argument);
}
