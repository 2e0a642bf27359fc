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

#ifndef OMGP_LOG_HPP
#define OMGP_LOG_HPP

#include <sstream>
#include <string>

namespace omgp {

/// Diagnostics go to stderr, gated by the OMGP_LOG environment variable:
/// "quiet" (default), "info", or "debug".
enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

LogLevel log_level();
void log_line(const std::string& message);

}  // namespace omgp

#define OMGP_LOG_AT(level, message)                          \
  do {                                                       \
    if (::omgp::log_level() >= (level)) {                    \
      std::ostringstream omgp_log_oss_;                      \
      omgp_log_oss_ << message;                              \
      ::omgp::log_line(omgp_log_oss_.str());                 \
    }                                                        \
  } while (0)

#define OMGP_LOG_INFO(message) OMGP_LOG_AT(::omgp::LogLevel::Info, message)
#define OMGP_LOG_DEBUG(message) OMGP_LOG_AT(::omgp::LogLevel::Debug, message)

#endif
