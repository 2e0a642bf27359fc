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

#include "log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace omgp {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* value = std::getenv("OMGP_LOG");
    if (value == nullptr) return LogLevel::Quiet;
    if (std::strcmp(value, "debug") == 0) return LogLevel::Debug;
    if (std::strcmp(value, "info") == 0) return LogLevel::Info;
    return LogLevel::Quiet;
  }();
  return level;
}

void log_line(const std::string& message) {
  std::fprintf(stderr, "[omgp] %s\n", message.c_str());
}

}  // namespace omgp
