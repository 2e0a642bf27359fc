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

#include "csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace omgp {

namespace {

std::vector<std::string> split_fields(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_cell(const std::string& cell, const std::string& path, size_t line_number) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  while (end != nullptr && (*end == ' ' || *end == '\t')) ++end;
  if (end == begin || end == nullptr || *end != '\0')
    throw IoError(path + ":" + std::to_string(line_number) + ": cannot parse cell '" + cell +
                  "' as a number");
  return value;
}

}  // namespace

CsvTable read_csv_table(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for reading");

  std::string line;
  if (!std::getline(file, line)) throw IoError(path + ": empty file, expected a header row");
  CsvTable table;
  table.header = split_fields(line);
  const size_t num_cols = table.header.size();
  if (num_cols == 0) throw IoError(path + ":1: empty header row");

  std::vector<std::vector<double>> rows;
  size_t line_number = 1;
  while (std::getline(file, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != num_cols)
      throw IoError(path + ":" + std::to_string(line_number) + ": expected " +
                    std::to_string(num_cols) + " fields, found " + std::to_string(fields.size()));
    std::vector<double> row(num_cols);
    for (size_t c = 0; c < num_cols; ++c) row[c] = parse_cell(fields[c], path, line_number);
    rows.push_back(std::move(row));
  }

  table.values.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(num_cols));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < num_cols; ++c)
      table.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  return table;
}

void write_csv_table(const std::string& path, const std::vector<std::string>& header,
                     const MatrixXd& values) {
  if (static_cast<Eigen::Index>(header.size()) != values.cols())
    throw std::invalid_argument("write_csv_table: header width disagrees with the value matrix");
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  for (size_t c = 0; c < header.size(); ++c) {
    if (c > 0) file << ',';
    file << header[c];
  }
  file << '\n';
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
      if (c > 0) file << ',';
      file << format_double(values(r, c));
    }
    file << '\n';
  }
  if (!file) throw IoError("write failed for '" + path + "'");
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace omgp
