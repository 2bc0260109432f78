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

#ifndef SHUFFLEDP_RESULT_TABLE_HPP_
#define SHUFFLEDP_RESULT_TABLE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace shuffledp {

// Decimal rendering that round-trips: shortest string parsing back to the
// exact same double.  All table output goes through these, so files are
// byte-identical across runs with equal configs and seeds.
std::string format_double(double v);
std::string format_u64(std::uint64_t v);
std::string format_bool(bool v);

// Column-ordered experiment results plus sorted key-value metadata.
// Formatting is fully deterministic; nothing time- or host-dependent is
// ever written.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::map<std::string, std::string> metadata;

  // Throws when a row's width differs from columns.
  void add_row(std::vector<std::string> row);

  // Metadata as leading "# key=value" lines, then header, then rows.
  // Cells are RFC-4180-quoted when they contain commas or quotes.
  std::string to_csv() const;

  // {"metadata": {...}, "columns": [...], "rows": [[...]]}
  std::string to_json() const;

  // format must be "csv" or "json"; path "" writes to stdout.
  void write(const std::string& format, const std::string& path) const;
};

}  // namespace shuffledp

#endif  // SHUFFLEDP_RESULT_TABLE_HPP_
