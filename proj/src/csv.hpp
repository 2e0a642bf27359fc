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

#ifndef OMGP_CSV_HPP
#define OMGP_CSV_HPP

#include <string>
#include <vector>

#include "types.hpp"

namespace omgp {

/// Comma-separated numeric table: one header row naming the columns, then
/// uniform-width rows of decimal numbers. Values survive a write/read
/// round-trip exactly (17 significant digits).
struct CsvTable {
  std::vector<std::string> header;
  MatrixXd values;
};

CsvTable read_csv_table(const std::string& path);
void write_csv_table(const std::string& path, const std::vector<std::string>& header,
                     const MatrixXd& values);

/// Shortest decimal form that round-trips a double (up to 17 significant
/// digits).
std::string format_double(double value);

}  // namespace omgp

#endif
