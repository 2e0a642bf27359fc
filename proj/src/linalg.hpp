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

#ifndef OMGP_LINALG_HPP
#define OMGP_LINALG_HPP

#include <Eigen/Cholesky>

#include "types.hpp"

namespace omgp {

/// Lower-triangular Cholesky factor of a symmetric PSD matrix. Starts from
/// `base_jitter` on the diagonal and escalates it tenfold up to three times
/// before giving up.
inline MatrixXd cholesky_with_escalation(const MatrixXd& m, double base_jitter,
                                         const char* what) {
  double jitter = base_jitter;
  for (int attempt = 0; attempt < 4; ++attempt) {
    MatrixXd shifted = m;
    shifted.diagonal().array() += jitter;
    Eigen::LLT<MatrixXd> llt(shifted);
    if (llt.info() == Eigen::Success) return llt.matrixL();
    jitter = (jitter == 0.0) ? 1e-12 : jitter * 10.0;
  }
  throw NumericalError(std::string(what) + ": Cholesky factorization failed after jitter escalation");
}

/// log|A| from a lower-triangular Cholesky factor of A.
inline double log_det_from_cholesky(const MatrixXd& lower) {
  return 2.0 * lower.diagonal().array().log().sum();
}

}  // namespace omgp

#endif
