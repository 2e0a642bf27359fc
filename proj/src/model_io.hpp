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

#ifndef OMGP_MODEL_IO_HPP
#define OMGP_MODEL_IO_HPP

#include <string>

#include "inference.hpp"

namespace omgp {

/// Serialize a fitted model to a single JSON document: the configuration,
/// training data, responsibilities, fitted hyperparameters, and bound trace.
/// Doubles use shortest round-trip encoding; the trajectory posterior is
/// recomputed on load rather than stored.
void save_model(const OmgpModel& model, const std::string& path);
OmgpModel load_model(const std::string& path);

std::string model_to_json(const OmgpModel& model);
OmgpModel model_from_json(const std::string& text, const std::string& origin);

}  // namespace omgp

#endif
