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

#ifndef OMGP_INFERENCE_HPP
#define OMGP_INFERENCE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "kernels.hpp"
#include "types.hpp"

namespace omgp {

/// Responsibilities below this are lifted back up (rows renormalized after),
/// so log-responsibility terms and B^{1/2} stay finite everywhere.
constexpr double kResponsibilityFloor = 1e-10;

/// Component prior. Uniform (1/M for every sample) unless a full
/// row-stochastic N x M matrix is supplied. Entries must be strictly
/// positive.
struct PriorSpec {
  std::optional<MatrixXd> matrix;

  bool is_uniform() const { return !matrix.has_value(); }
  MatrixXd materialize(Eigen::Index n, int num_components) const;
  void validate(Eigen::Index n, int num_components) const;
};

struct MStepOptions {
  int max_evals = 20;
  double gradient_tol = 1e-5;
};

struct OmgpConfig {
  int num_components = 1;
  std::vector<KernelSpec> kernels;  // one per component
  double noise_variance = 0.1;      // shared sigma^2

  // Extension: one noise variance per component instead of a shared one.
  // Off by default. When on with an empty vector, every component starts
  // from noise_variance.
  bool per_component_noise = false;
  std::vector<double> component_noise_variances;

  // Extension: scale each output dimension to unit variance before fitting, so
  // dimensions with wildly different units share the noise model sensibly.
  // Off by default; when on, hyperparameters are in standardized units and
  // every reported mean is mapped back to original units.
  bool standardize_outputs = false;

  PriorSpec prior;
  int max_em_rounds = 50;
  double estep_tol = 1e-6;        // absolute bound-improvement threshold
  int max_inner_iterations = 200; // safety cap on the inner E loop
  MStepOptions mstep;
  std::uint64_t seed = 0;

  // Number of independently perturbed initializations to run; the fit with the
  // highest final bound is kept. Restart r draws its perturbation from
  // substream r of `seed`, so restart 0 alone reproduces a single-start fit.
  int num_restarts = 3;

  double noise_for(int component) const {
    if (per_component_noise && !component_noise_variances.empty())
      return component_noise_variances[static_cast<size_t>(component)];
    return noise_variance;
  }

  void validate(Eigen::Index n, Eigen::Index input_dim) const;
};

/// The variational posterior q(Z): a row-stochastic N x M matrix of
/// component responsibilities.
struct Responsibilities {
  MatrixXd matrix;

  Eigen::Index num_samples() const { return matrix.rows(); }
  int num_components() const { return static_cast<int>(matrix.cols()); }
  void validate() const;
};

/// Gaussian posterior over one latent trajectory: q(f_d) = N(mean_d, covariance)
/// shared across output dimensions. precision_diagonal holds B = diag(pihat/sigma^2)
/// and chol_factor the upper-triangular R with R^T R = I + B^1/2 K B^1/2.
struct ComponentPosterior {
  MatrixXd mean;                // N x D
  MatrixXd covariance;          // N x N
  VectorXd precision_diagonal;  // N
  MatrixXd chol_factor;         // N x N, upper triangular
};

struct TrajectoryPosterior {
  std::vector<ComponentPosterior> components;

  // Set when the posterior is the closed-form optimum for its stored B;
  // bound computations then use the cheaper algebraic identities.
  bool from_m_step = false;

  int num_components() const { return static_cast<int>(components.size()); }
};

struct OmgpModel {
  OmgpConfig config;                // as supplied (initial hyperparameters)
  std::vector<KernelSpec> kernels;  // fitted
  VectorXd noise_variances;         // fitted; size 1 (shared) or M
  DataSet data;                     // original, uncentered
  Eigen::RowVectorXd target_means;
  Eigen::RowVectorXd target_scales;  // per-dimension divisors; all ones unless standardizing
  Responsibilities responsibilities;
  TrajectoryPosterior posterior;  // for the centered data at the fitted hyperparameters
  std::vector<std::pair<int, double>> bound_trace;  // (round, L_KL)
  std::vector<std::vector<double>> lvb_history;     // inner-loop L_VB per round
  bool converged = false;

  int num_components() const { return static_cast<int>(kernels.size()); }
  double noise_for(int component) const {
    return noise_variances.size() == 1 ? noise_variances(0)
                                       : noise_variances(component);
  }
  double final_bound() const {
    return bound_trace.empty() ? 0.0 : bound_trace.back().second;
  }
  DataSet centered_data() const;
};

// ---------------------------------------------------------------------------
// Variational updates and bounds. These operate on the data exactly as given
// (no centering); fit() centers once up front and works on the centered copy.
// ---------------------------------------------------------------------------

/// Closed-form update of q(Z) given the trajectory marginals: responsibilities
/// proportional to prior * exp(a_nm), row-normalized in log space, floored.
Responsibilities e_step(const DataSet& data, const TrajectoryPosterior& posterior,
                        const OmgpConfig& config);

/// Closed-form update of q(F) given q(Z), through triangular solves against
/// R = chol(I + B^1/2 K B^1/2) only.
TrajectoryPosterior m_step_posterior(const DataSet& data,
                                     const Responsibilities& responsibilities,
                                     const OmgpConfig& config);

/// Standard variational lower bound.
double bound_lvb(const DataSet& data, const Responsibilities& responsibilities,
                 const TrajectoryPosterior& posterior, const OmgpConfig& config);

/// KL-corrected bound: the latent trajectories are integrated out, so the
/// value depends on q(Z) and the hyperparameters only.
double bound_lkl(const DataSet& data, const Responsibilities& responsibilities,
                 const OmgpConfig& config);

/// Analytic gradient of bound_lkl with respect to every log-hyperparameter
/// (per-component kernel parameters, then noise), with q(Z) held fixed.
VectorXd lkl_hyper_gradient(const DataSet& data,
                            const Responsibilities& responsibilities,
                            const OmgpConfig& config);

/// Number of log-hyperparameters the M-step optimizes; layout is
/// [component 0 kernel..., component 1 kernel..., ..., noise (1 or M)].
int num_log_hyperparameters(const OmgpConfig& config);
VectorXd pack_log_hyperparameters(const OmgpConfig& config);
void unpack_log_hyperparameters(const VectorXd& values, OmgpConfig& config);

/// Full variational EM: alternates the inner E loop (Eq. updates of q(Z) and
/// q(F) until the standard bound stalls) with gradient ascent of the
/// KL-corrected bound over the hyperparameters.
OmgpModel fit(const DataSet& data, const OmgpConfig& config);

/// Grow the data set and re-run fit warm-started from the previous solution:
/// existing responsibility rows and the fitted hyperparameters carry over,
/// rows for new samples start from the prior. An empty batch returns the
/// model unchanged.
OmgpModel fit_online(const OmgpModel& model, const DataSet& new_batch);

}  // namespace omgp

#endif
