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

#include "inference.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "lbfgs.hpp"
#include "linalg.hpp"
#include "log.hpp"
#include "rng.hpp"

namespace omgp {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Per-component factorization shared by the posterior update, both bounds,
/// and the hyperparameter gradient. chol_lower satisfies
/// L L^T = I + B^1/2 (K + jitter I) B^1/2 with B = diag(pihat_col / sigma2).
struct ComponentFactors {
  MatrixXd gram;        // K + jitter I
  VectorXd sqrt_b;      // B^1/2 diagonal
  MatrixXd chol_lower;  // L
};

ComponentFactors factor_component(const MatrixXd& inputs, const KernelSpec& kernel,
                                  double sigma2, const VectorXd& pihat_col, int component) {
  ComponentFactors f;
  f.gram = gram(kernel, inputs);
  f.gram.diagonal().array() += jitter_for(kernel);
  f.sqrt_b = (pihat_col.array() / sigma2).sqrt();
  MatrixXd a = f.sqrt_b.asDiagonal() * f.gram * f.sqrt_b.asDiagonal();
  a.diagonal().array() += 1.0;
  if (!a.allFinite())
    throw NumericalError("component " + std::to_string(component) +
                         ": non-finite entries in I + B^1/2 K B^1/2");
  // A >= I, so a plain factorization suffices; failure means overflow-scale
  // hyperparameters rather than conditioning.
  Eigen::LLT<MatrixXd> llt(a);
  if (llt.info() != Eigen::Success)
    throw NumericalError("component " + std::to_string(component) +
                         ": Cholesky of I + B^1/2 K B^1/2 failed");
  f.chol_lower = llt.matrixL();
  return f;
}

MatrixXd floor_and_normalize(MatrixXd pihat) {
  pihat = pihat.cwiseMax(kResponsibilityFloor);
  pihat.array().colwise() /= pihat.rowwise().sum().array();
  return pihat;
}

double kl_indicator(const MatrixXd& pihat, const MatrixXd& prior) {
  double kl = 0.0;
  for (Eigen::Index i = 0; i < pihat.rows(); ++i)
    for (Eigen::Index j = 0; j < pihat.cols(); ++j)
      if (pihat(i, j) > 0.0) kl += pihat(i, j) * std::log(pihat(i, j) / prior(i, j));
  return kl;
}

/// Expected log-likelihood coefficients a_nm for the current trajectory
/// marginals, one column per component.
MatrixXd expected_loglik(const DataSet& data, const TrajectoryPosterior& posterior,
                         const OmgpConfig& config) {
  const Eigen::Index n = data.num_samples();
  const double d = static_cast<double>(data.output_dim());
  MatrixXd a(n, config.num_components);
  for (int m = 0; m < config.num_components; ++m) {
    const ComponentPosterior& comp = posterior.components[static_cast<size_t>(m)];
    const double sigma2 = config.noise_for(m);
    const VectorXd sq = (data.outputs - comp.mean).rowwise().squaredNorm();
    a.col(m) = -(sq.array() + d * comp.covariance.diagonal().array()) / (2.0 * sigma2) -
               0.5 * d * std::log(kTwoPi * sigma2);
  }
  return a;
}

void check_pair(const DataSet& data, const Responsibilities& responsibilities,
                const OmgpConfig& config, const char* where) {
  data.validate();
  if (responsibilities.matrix.rows() != data.num_samples() ||
      responsibilities.num_components() != config.num_components)
    throw std::invalid_argument(std::string(where) + ": responsibility matrix shape mismatch");
  if (static_cast<int>(config.kernels.size()) != config.num_components)
    throw std::invalid_argument(std::string(where) + ": need one kernel per component");
}

struct LklEval {
  double value = 0.0;
  VectorXd gradient;
};

/// Stable evaluation of the KL-corrected bound, optionally with its gradient
/// in the packed log-hyperparameter layout. Everything routes through the
/// factor L of I + B^1/2 K B^1/2.
LklEval lkl_value_and_gradient(const DataSet& data, const Responsibilities& responsibilities,
                               const OmgpConfig& config, bool want_gradient) {
  check_pair(data, responsibilities, config, "bound_lkl");
  const Eigen::Index n = data.num_samples();
  const double d = static_cast<double>(data.output_dim());
  const MatrixXd& pihat = responsibilities.matrix;
  const MatrixXd prior = config.prior.materialize(n, config.num_components);

  LklEval eval;
  int offset = 0;
  double shared_noise_accum = 0.0;
  if (want_gradient) eval.gradient = VectorXd::Zero(num_log_hyperparameters(config));

  for (int m = 0; m < config.num_components; ++m) {
    const KernelSpec& kernel = config.kernels[static_cast<size_t>(m)];
    const double sigma2 = config.noise_for(m);
    const ComponentFactors f = factor_component(data.inputs, kernel, sigma2, pihat.col(m), m);
    const auto lower = f.chol_lower.triangularView<Eigen::Lower>();

    const MatrixXd t = lower.solve(f.sqrt_b.asDiagonal() * data.outputs);
    eval.value += -0.5 * t.squaredNorm() - d * f.chol_lower.diagonal().array().log().sum() -
                  0.5 * d * std::log(kTwoPi * sigma2) * pihat.col(m).sum();

    if (want_gradient) {
      MatrixXd lw = MatrixXd(f.sqrt_b.asDiagonal());
      lower.solveInPlace(lw);                        // L^{-1} B^1/2
      const MatrixXd ginv = lw.transpose() * lw;     // (K + sigma^2 B_pi^{-1})^{-1}
      const MatrixXd alpha = lw.transpose() * t;     // ginv * outputs
      const MatrixXd mg = alpha * alpha.transpose() - d * ginv;

      const int nk = kernel.num_hyperparameters();
      for (int j = 0; j < nk; ++j) {
        // Index 0 scales the whole (jittered) Gram matrix; the others come
        // from the kernel's own log-derivative.
        const MatrixXd dk = (j == 0) ? f.gram : gram_gradient(kernel, data.inputs, j);
        eval.gradient(offset + j) = 0.5 * (mg.array() * dk.array()).sum();
      }
      offset += nk;

      const double diag_term =
          0.5 * (mg.diagonal().array() / pihat.col(m).array()).sum();
      if (config.per_component_noise) {
        const int noise_index =
            num_log_hyperparameters(config) - config.num_components + m;
        eval.gradient(noise_index) =
            sigma2 * diag_term + 0.5 * d * (static_cast<double>(n) - pihat.col(m).sum());
      } else {
        shared_noise_accum += diag_term;
      }
    }
  }

  if (want_gradient && !config.per_component_noise) {
    eval.gradient(eval.gradient.size() - 1) =
        config.noise_variance * shared_noise_accum +
        0.5 * d * static_cast<double>(n) * (config.num_components - 1);
  }

  eval.value -= kl_indicator(pihat, prior);
  return eval;
}

MatrixXd vstack(const MatrixXd& top, const MatrixXd& bottom) {
  MatrixXd out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

struct WarmStart {
  const MatrixXd* pihat = nullptr;  // rows for the leading samples
  const std::vector<KernelSpec>* kernels = nullptr;
  const VectorXd* noise = nullptr;
};

// Per-dimension divisors that bring the centered outputs to unit variance.
// Degenerate (constant) dimensions keep scale 1 so the division is a no-op.
Eigen::RowVectorXd output_scales(const MatrixXd& outputs, bool standardize) {
  Eigen::RowVectorXd scales = Eigen::RowVectorXd::Ones(outputs.cols());
  if (!standardize) return scales;
  const Eigen::RowVectorXd means = outputs.colwise().mean();
  for (Eigen::Index j = 0; j < outputs.cols(); ++j) {
    const double sd = std::sqrt((outputs.col(j).array() - means(j)).square().mean());
    if (sd > 0.0) scales(j) = sd;
  }
  return scales;
}

OmgpModel fit_single(const DataSet& data, const OmgpConfig& config, const WarmStart& warm,
                     std::uint64_t restart) {
  const Eigen::Index n = data.num_samples();
  const int num_components = config.num_components;

  OmgpConfig working = config;
  if (warm.kernels) working.kernels = *warm.kernels;
  if (warm.noise) {
    if (warm.noise->size() == 1) {
      working.noise_variance = (*warm.noise)(0);
    } else {
      working.component_noise_variances.assign(warm.noise->data(),
                                               warm.noise->data() + warm.noise->size());
    }
  }

  Eigen::RowVectorXd target_means = data.outputs.colwise().mean();
  Eigen::RowVectorXd target_scales = output_scales(data.outputs, config.standardize_outputs);
  DataSet centered;
  centered.inputs = data.inputs;
  centered.outputs = (data.outputs.rowwise() - target_means).array().rowwise() /
                     target_scales.array();

  const MatrixXd prior = working.prior.materialize(n, num_components);

  // Break symmetry: responsibilities start from the prior with +-10% relative
  // perturbation, renormalized. Warm-started rows are kept verbatim.
  RngStream rng(config.seed, restart);
  MatrixXd pihat(n, num_components);
  const Eigen::Index warm_rows = warm.pihat ? warm.pihat->rows() : 0;
  if (warm_rows > 0) pihat.topRows(warm_rows) = *warm.pihat;
  for (Eigen::Index i = warm_rows; i < n; ++i)
    for (int m = 0; m < num_components; ++m)
      pihat(i, m) = prior(i, m) * (1.0 + rng.uniform(-0.1, 0.1));
  pihat = floor_and_normalize(pihat);

  OmgpModel model;
  model.config = config;
  model.data = data;
  model.target_means = target_means;
  model.target_scales = target_scales;

  TrajectoryPosterior posterior;
  double prev_lkl = -std::numeric_limits<double>::infinity();
  const int nh = num_log_hyperparameters(working);

  for (int round = 1; round <= working.max_em_rounds; ++round) {
    // Inner loop: alternate the closed-form q(F) and q(Z) updates until the
    // standard bound stalls.
    std::vector<double> inner;
    double prev_lvb = -std::numeric_limits<double>::infinity();
    for (int it = 0; it < working.max_inner_iterations; ++it) {
      posterior = m_step_posterior(centered, Responsibilities{pihat}, working);
      Responsibilities updated = e_step(centered, posterior, working);
      pihat = updated.matrix;
      const double lvb = bound_lvb(centered, updated, posterior, working);
      inner.push_back(lvb);
      if (it > 0 && lvb - prev_lvb < working.estep_tol) break;
      prev_lvb = lvb;
    }
    model.lvb_history.push_back(std::move(inner));

    // Hyperparameter step: ascend the KL-corrected bound with q(Z) fixed.
    if (working.mstep.max_evals > 0 && nh > 0) {
      const Responsibilities fixed{pihat};
      const VectorXd x0 = pack_log_hyperparameters(working);
      auto objective = [&](const VectorXd& x, VectorXd& grad) -> double {
        for (Eigen::Index i = 0; i < x.size(); ++i) {
          const double v = std::exp(x(i));
          if (!std::isfinite(v) || v <= 0.0) {
            grad = VectorXd::Zero(x.size());
            return std::numeric_limits<double>::infinity();
          }
        }
        OmgpConfig candidate = working;
        unpack_log_hyperparameters(x, candidate);
        try {
          const LklEval eval = lkl_value_and_gradient(centered, fixed, candidate, true);
          grad = -eval.gradient;
          return -eval.value;
        } catch (const NumericalError&) {
          grad = VectorXd::Zero(x.size());
          return std::numeric_limits<double>::infinity();
        }
      };
      LbfgsOptions opts;
      opts.max_evaluations = working.mstep.max_evals;
      opts.gradient_tol = working.mstep.gradient_tol;
      const LbfgsResult res = lbfgs_minimize(objective, x0, opts);
      if (res.x.size() == x0.size()) unpack_log_hyperparameters(res.x, working);
    }

    const double lkl = bound_lkl(centered, Responsibilities{pihat}, working);
    model.bound_trace.emplace_back(round, lkl);
    OMGP_LOG_INFO("fit: round " << round << " bound " << lkl);
    if (round > 1 && lkl - prev_lkl < working.estep_tol) {
      model.converged = true;
      break;
    }
    prev_lkl = lkl;
  }

  model.kernels = working.kernels;
  if (working.per_component_noise) {
    model.noise_variances.resize(num_components);
    for (int m = 0; m < num_components; ++m) model.noise_variances(m) = working.noise_for(m);
  } else {
    model.noise_variances = VectorXd::Constant(1, working.noise_variance);
  }
  model.responsibilities = Responsibilities{pihat};
  model.posterior = m_step_posterior(centered, model.responsibilities, working);
  return model;
}

// The responsibility update has multiple fixed points that the first EM rounds
// commit to, so a few cheap screening rounds per perturbation draw rank the
// basins reliably; only the best draw is run to convergence.
constexpr int kScreeningRounds = 2;

OmgpModel fit_internal(const DataSet& data, const OmgpConfig& config, const WarmStart& warm) {
  data.validate();
  if (data.num_samples() < config.num_components)
    throw std::invalid_argument("fit: need at least one sample per component");
  config.validate(data.num_samples(), data.input_dim());

  // Restarts explore the seeded initial perturbations; with one component the
  // perturbation cancels, and a warm start already fixes the basin, so both
  // run single-start.
  const bool cold = !warm.pihat || warm.pihat->rows() == 0;
  const int restarts = (cold && config.num_components > 1) ? config.num_restarts : 1;
  if (restarts == 1) return fit_single(data, config, warm, 0);

  std::uint64_t chosen = 0;
  double chosen_bound = -std::numeric_limits<double>::infinity();
  OmgpConfig screening = config;
  screening.max_em_rounds = std::min(config.max_em_rounds, kScreeningRounds);
  for (int r = 0; r < restarts; ++r) {
    const OmgpModel probe = fit_single(data, screening, warm, static_cast<std::uint64_t>(r));
    const double bound = probe.final_bound();
    if (std::isfinite(bound) && bound > chosen_bound) {
      chosen_bound = bound;
      chosen = static_cast<std::uint64_t>(r);
    }
  }
  return fit_single(data, config, warm, chosen);
}

}  // namespace

MatrixXd PriorSpec::materialize(Eigen::Index n, int num_components) const {
  validate(n, num_components);
  if (is_uniform())
    return MatrixXd::Constant(n, num_components, 1.0 / static_cast<double>(num_components));
  return *matrix;
}

void PriorSpec::validate(Eigen::Index n, int num_components) const {
  if (is_uniform()) return;
  if (matrix->rows() != n || matrix->cols() != num_components)
    throw std::invalid_argument("prior: matrix must be N x num_components");
  if (!matrix->allFinite() || (matrix->array() <= 0.0).any())
    throw std::invalid_argument("prior: entries must be strictly positive");
  if (((matrix->rowwise().sum().array() - 1.0).abs() > 1e-12).any())
    throw std::invalid_argument("prior: rows must sum to one");
}

void OmgpConfig::validate(Eigen::Index n, Eigen::Index input_dim) const {
  if (num_components < 1) throw std::invalid_argument("config: num_components must be >= 1");
  if (static_cast<int>(kernels.size()) != num_components)
    throw std::invalid_argument("config: need exactly one kernel per component");
  for (const KernelSpec& k : kernels) k.validate(input_dim);
  if (!(noise_variance > 0.0) || !std::isfinite(noise_variance))
    throw std::invalid_argument("config: noise_variance must be positive");
  if (per_component_noise) {
    if (!component_noise_variances.empty() &&
        static_cast<int>(component_noise_variances.size()) != num_components)
      throw std::invalid_argument("config: per-component noise needs num_components values");
    for (double v : component_noise_variances)
      if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument("config: noise variances must be positive");
  } else if (!component_noise_variances.empty()) {
    throw std::invalid_argument("config: component noise list set without per_component_noise");
  }
  if (max_em_rounds < 1) throw std::invalid_argument("config: max_em_rounds must be >= 1");
  if (num_restarts < 1) throw std::invalid_argument("config: num_restarts must be >= 1");
  if (!(estep_tol > 0.0)) throw std::invalid_argument("config: estep_tol must be positive");
  if (max_inner_iterations < 1)
    throw std::invalid_argument("config: max_inner_iterations must be >= 1");
  if (mstep.max_evals < 0) throw std::invalid_argument("config: mstep.max_evals must be >= 0");
  prior.validate(n, num_components);
}

void Responsibilities::validate() const {
  if ((matrix.array() < 0.0).any() || !matrix.allFinite())
    throw std::invalid_argument("responsibilities: entries must be finite and non-negative");
  if (matrix.cols() > 0 && ((matrix.rowwise().sum().array() - 1.0).abs() > 1e-10).any())
    throw std::invalid_argument("responsibilities: rows must sum to one");
}

DataSet OmgpModel::centered_data() const {
  DataSet out;
  out.inputs = data.inputs;
  out.outputs = data.outputs.rowwise() - target_means;
  if (target_scales.size() == out.outputs.cols())
    out.outputs.array().rowwise() /= target_scales.array();
  return out;
}

Responsibilities e_step(const DataSet& data, const TrajectoryPosterior& posterior,
                        const OmgpConfig& config) {
  data.validate();
  if (posterior.num_components() != config.num_components)
    throw std::invalid_argument("e_step: posterior/config component count mismatch");
  const Eigen::Index n = data.num_samples();
  const MatrixXd prior = config.prior.materialize(n, config.num_components);

  MatrixXd log_unnorm = prior.array().log().matrix() + expected_loglik(data, posterior, config);
  const VectorXd row_max = log_unnorm.rowwise().maxCoeff();
  MatrixXd p = (log_unnorm.colwise() - row_max).array().exp();
  p.array().colwise() /= p.rowwise().sum().array();
  p = floor_and_normalize(std::move(p));
  assert(n == 0 || (p.rowwise().sum().array() > 0.0).all());  // flooring forbids zero rows
  return Responsibilities{std::move(p)};
}

TrajectoryPosterior m_step_posterior(const DataSet& data,
                                     const Responsibilities& responsibilities,
                                     const OmgpConfig& config) {
  check_pair(data, responsibilities, config, "m_step_posterior");
  TrajectoryPosterior posterior;
  posterior.from_m_step = true;
  posterior.components.reserve(static_cast<size_t>(config.num_components));

  for (int m = 0; m < config.num_components; ++m) {
    const double sigma2 = config.noise_for(m);
    const ComponentFactors f = factor_component(
        data.inputs, config.kernels[static_cast<size_t>(m)], sigma2,
        responsibilities.matrix.col(m), m);
    const auto lower = f.chol_lower.triangularView<Eigen::Lower>();

    ComponentPosterior comp;
    const MatrixXd v = lower.solve(f.sqrt_b.asDiagonal() * f.gram);  // L^{-1} B^1/2 K
    comp.covariance = f.gram - v.transpose() * v;
    comp.covariance = 0.5 * (comp.covariance + comp.covariance.transpose());
    const MatrixXd t = lower.solve(f.sqrt_b.asDiagonal() * data.outputs);
    comp.mean = v.transpose() * t;  // K B^1/2 (L L^T)^{-1} B^1/2 Y
    comp.precision_diagonal = f.sqrt_b.array().square();
    comp.chol_factor = f.chol_lower.transpose();
    posterior.components.push_back(std::move(comp));
  }
  return posterior;
}

double bound_lvb(const DataSet& data, const Responsibilities& responsibilities,
                 const TrajectoryPosterior& posterior, const OmgpConfig& config) {
  check_pair(data, responsibilities, config, "bound_lvb");
  if (posterior.num_components() != config.num_components)
    throw std::invalid_argument("bound_lvb: posterior/config component count mismatch");
  const Eigen::Index n = data.num_samples();
  const double d = static_cast<double>(data.output_dim());
  const MatrixXd& pihat = responsibilities.matrix;
  const MatrixXd prior = config.prior.materialize(n, config.num_components);

  const MatrixXd a = expected_loglik(data, posterior, config);
  double bound = (pihat.array() * a.array()).sum() - kl_indicator(pihat, prior);

  for (int m = 0; m < config.num_components; ++m) {
    const ComponentPosterior& comp = posterior.components[static_cast<size_t>(m)];
    double kl_f;
    if (posterior.from_m_step) {
      // At the closed-form optimum the prior-whitened terms collapse onto the
      // stored factor: log|K| - log|Sigma| = 2 sum log R_nn,
      // tr(K^{-1} Sigma) = N - tr(B Sigma), K^{-1} mu_d = B (y_d - mu_d).
      const double logdet_ratio = 2.0 * comp.chol_factor.diagonal().array().log().sum();
      const double trace_term =
          (comp.precision_diagonal.array() * comp.covariance.diagonal().array()).sum();
      const double quad =
          0.5 * (comp.precision_diagonal.array() *
                 (comp.mean.array() * (data.outputs - comp.mean).array()).rowwise().sum())
                    .sum();
      kl_f = 0.5 * d * (logdet_ratio - trace_term) + quad;
    } else {
      const KernelSpec& kernel = config.kernels[static_cast<size_t>(m)];
      MatrixXd k = gram(kernel, data.inputs);
      const MatrixXd lk = cholesky_with_escalation(k, jitter_for(kernel), "bound_lvb gram");
      const double sigma_jitter = 1e-12 * (comp.covariance.trace() / std::max<double>(1, n) + 1.0);
      const MatrixXd ls =
          cholesky_with_escalation(comp.covariance, sigma_jitter, "bound_lvb covariance");
      const auto lower = lk.triangularView<Eigen::Lower>();
      const double trace_term = lower.solve(ls).squaredNorm();  // tr(K^{-1} Sigma)
      const double quad = 0.5 * lower.solve(comp.mean).squaredNorm();
      kl_f = 0.5 * d *
                 (trace_term - static_cast<double>(n) + log_det_from_cholesky(lk) -
                  log_det_from_cholesky(ls)) +
             quad;
    }
    bound -= kl_f;
  }
  return bound;
}

double bound_lkl(const DataSet& data, const Responsibilities& responsibilities,
                 const OmgpConfig& config) {
  return lkl_value_and_gradient(data, responsibilities, config, false).value;
}

VectorXd lkl_hyper_gradient(const DataSet& data, const Responsibilities& responsibilities,
                            const OmgpConfig& config) {
  return lkl_value_and_gradient(data, responsibilities, config, true).gradient;
}

int num_log_hyperparameters(const OmgpConfig& config) {
  int total = 0;
  for (const KernelSpec& k : config.kernels) total += k.num_hyperparameters();
  return total + (config.per_component_noise ? config.num_components : 1);
}

VectorXd pack_log_hyperparameters(const OmgpConfig& config) {
  VectorXd packed(num_log_hyperparameters(config));
  int at = 0;
  for (const KernelSpec& k : config.kernels)
    for (double v : k.hyperparameters()) packed(at++) = std::log(v);
  if (config.per_component_noise) {
    for (int m = 0; m < config.num_components; ++m)
      packed(at++) = std::log(config.noise_for(m));
  } else {
    packed(at++) = std::log(config.noise_variance);
  }
  return packed;
}

void unpack_log_hyperparameters(const VectorXd& values, OmgpConfig& config) {
  if (values.size() != num_log_hyperparameters(config))
    throw std::invalid_argument("unpack_log_hyperparameters: length mismatch");
  int at = 0;
  for (KernelSpec& k : config.kernels) {
    std::vector<double> hypers(static_cast<size_t>(k.num_hyperparameters()));
    for (double& h : hypers) h = std::exp(values(at++));
    k.set_hyperparameters(hypers);
  }
  if (config.per_component_noise) {
    config.component_noise_variances.resize(static_cast<size_t>(config.num_components));
    for (int m = 0; m < config.num_components; ++m)
      config.component_noise_variances[static_cast<size_t>(m)] = std::exp(values(at++));
  } else {
    config.noise_variance = std::exp(values(at++));
  }
}

OmgpModel fit(const DataSet& data, const OmgpConfig& config) {
  return fit_internal(data, config, WarmStart{});
}

OmgpModel fit_online(const OmgpModel& model, const DataSet& new_batch) {
  if (new_batch.num_samples() == 0 && new_batch.inputs.cols() == 0) return model;
  new_batch.validate();
  if (new_batch.num_samples() == 0) return model;
  if (new_batch.input_dim() != model.data.input_dim() ||
      new_batch.output_dim() != model.data.output_dim())
    throw std::invalid_argument("fit_online: batch dimensions disagree with the model's data");
  if (!model.config.prior.is_uniform())
    throw std::invalid_argument(
        "fit_online: a fixed prior matrix cannot be grown; use the uniform prior");

  DataSet combined;
  combined.inputs = vstack(model.data.inputs, new_batch.inputs);
  combined.outputs = vstack(model.data.outputs, new_batch.outputs);
  if (model.data.labels && new_batch.labels) {
    VectorXi labels(combined.num_samples());
    labels << *model.data.labels, *new_batch.labels;
    combined.labels = labels;
  }

  WarmStart warm;
  warm.pihat = &model.responsibilities.matrix;
  warm.kernels = &model.kernels;
  warm.noise = &model.noise_variances;
  return fit_internal(combined, model.config, warm);
}

}  // namespace omgp
