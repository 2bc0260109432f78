// Copyright 2026 The shuffledp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shuffledp/result_table.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace shuffledp {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

std::string format_u64(std::uint64_t v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("format_u64: conversion failed");
  return std::string(buf, ptr);
}

std::string format_bool(bool v) { return v ? "true" : "false"; }

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

void ResultTable::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("ResultTable: row width differs from column count");
  }
  rows.push_back(std::move(row));
}

std::string ResultTable::to_csv() const {
  std::ostringstream os;
  for (const auto& [key, value] : metadata) {
    os << "# " << key << "=" << value << "\n";
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) os << ",";
    os << csv_escape(columns[i]);
  }
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) os << ",";
      os << csv_escape(row[i]);
    }
    os << "\n";
  }
  return os.str();
}

std::string ResultTable::to_json() const {
  nlohmann::ordered_json j;
  j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : metadata) j["metadata"][key] = value;
  j["columns"] = columns;
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

void ResultTable::write(const std::string& format, const std::string& path) const {
  std::string payload;
  if (format == "csv") {
    payload = to_csv();
  } else if (format == "json") {
    payload = to_json();
  } else {
    throw std::invalid_argument("ResultTable: format must be csv or json");
  }
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("ResultTable: cannot open output file " + path);
  out << payload;
  if (!out) throw std::runtime_error("ResultTable: write failed for " + path);
}

}  // namespace shuffledp
