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

#ifndef OMGP_LBFGS_HPP
#define OMGP_LBFGS_HPP

#include <deque>
#include <functional>
#include <limits>

#include "types.hpp"

namespace omgp {

struct LbfgsOptions {
  int max_evaluations = 20;   // budget on objective evaluations
  double gradient_tol = 1e-5; // stop when ||grad||_inf falls below this
  int history = 8;
  double max_step_norm = 5.0; // trust cap on a single step, in parameter units
};

struct LbfgsResult {
  VectorXd x;
  double value = std::numeric_limits<double>::infinity();
  double gradient_norm = std::numeric_limits<double>::infinity();
  int evaluations = 0;
  bool converged = false;  // gradient tolerance reached
};

/// Limited-memory BFGS minimizer with Armijo backtracking, budgeted by
/// objective evaluations. The objective may return +inf to reject a point
/// (the line search then backtracks). Returns the best point seen.
inline LbfgsResult lbfgs_minimize(
    const std::function<double(const VectorXd&, VectorXd&)>& objective,
    const VectorXd& x0, const LbfgsOptions& opts = {}) {
  LbfgsResult result;
  const Eigen::Index n = x0.size();

  VectorXd x = x0, grad(n);
  double f = objective(x, grad);
  ++result.evaluations;
  result.x = x;
  result.value = f;
  result.gradient_norm = grad.lpNorm<Eigen::Infinity>();
  if (!std::isfinite(f)) return result;

  std::deque<VectorXd> s_hist, y_hist;
  std::deque<double> rho_hist;

  while (result.evaluations < opts.max_evaluations) {
    if (grad.lpNorm<Eigen::Infinity>() < opts.gradient_tol) {
      result.converged = true;
      break;
    }

    // Two-loop recursion for the search direction.
    VectorXd q = grad;
    std::vector<double> alpha(s_hist.size());
    for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
      alpha[i] = rho_hist[i] * s_hist[i].dot(q);
      q -= alpha[i] * y_hist[i];
    }
    double gamma = 1.0;
    if (!s_hist.empty()) {
      const double yy = y_hist.back().squaredNorm();
      if (yy > 0.0) gamma = s_hist.back().dot(y_hist.back()) / yy;
    }
    VectorXd direction = gamma * q;
    for (size_t i = 0; i < s_hist.size(); ++i) {
      const double beta = rho_hist[i] * y_hist[i].dot(direction);
      direction += (alpha[i] - beta) * s_hist[i];
    }
    direction = -direction;

    if (direction.dot(grad) >= 0.0) direction = -grad;  // keep descent
    const double dir_norm = direction.norm();
    if (dir_norm > opts.max_step_norm) direction *= opts.max_step_norm / dir_norm;

    // Armijo backtracking.
    const double slope = grad.dot(direction);
    double step = 1.0;
    bool accepted = false;
    VectorXd x_new(n), grad_new(n);
    double f_new = 0.0;
    for (int bt = 0; bt < 12 && result.evaluations < opts.max_evaluations; ++bt) {
      x_new = x + step * direction;
      f_new = objective(x_new, grad_new);
      ++result.evaluations;
      if (std::isfinite(f_new) && f_new <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    const VectorXd s = x_new - x;
    const VectorXd y = grad_new - grad;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      s_hist.push_back(s);
      y_hist.push_back(y);
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > opts.history) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }

    x = x_new;
    grad = grad_new;
    f = f_new;
    if (f < result.value) {
      result.value = f;
      result.x = x;
      result.gradient_norm = grad.lpNorm<Eigen::Infinity>();
    }
  }
  return result;
}

}  // namespace omgp

#endif
