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

#include "shuffledp/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "shuffledp/result_table.hpp"

namespace shuffledp {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  double v = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("config: bad numeric value for " + key);
  }
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("config: bad integer value for " + key);
  }
  return v;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_string(buffer.str());
}

ExperimentConfig ExperimentConfig::from_string(const std::string& text) {
  ExperimentConfig config;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: expected key=value, got: " + stripped);
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "epsilon") config.epsilon = parse_double(key, value);
    else if (key == "delta") config.delta = parse_double(key, value);
    else if (key == "n") config.n = parse_u64(key, value);
    else if (key == "d") config.d = parse_u64(key, value);
    else if (key == "beta") config.beta = parse_double(key, value);
    else if (key == "trials") config.trials = parse_u64(key, value);
    else if (key == "seed") config.seed = parse_u64(key, value);
    else if (key == "mode") config.mode = value;
    else if (key == "format") config.format = value;
    else if (key == "out") config.out = value;
    else if (key == "h") config.h = parse_u64(key, value);
    else if (key == "ell") config.ell = parse_u64(key, value);
    else if (key == "k") config.k = parse_u64(key, value);
    else if (key == "s") config.s = parse_u64(key, value);
    else if (key == "t") config.t = parse_u64(key, value);
    else throw std::invalid_argument("config: unknown key " + key);
  }
  return config;
}

std::string ExperimentConfig::to_file_string() const {
  std::ostringstream os;
  os << "epsilon=" << format_double(epsilon) << "\n";
  os << "delta=" << format_double(delta) << "\n";
  os << "n=" << format_u64(n) << "\n";
  os << "d=" << format_u64(d) << "\n";
  os << "beta=" << format_double(beta) << "\n";
  os << "trials=" << format_u64(trials) << "\n";
  os << "seed=" << format_u64(seed) << "\n";
  os << "mode=" << mode << "\n";
  os << "format=" << format << "\n";
  if (!out.empty()) os << "out=" << out << "\n";
  os << "h=" << format_u64(h) << "\n";
  os << "ell=" << format_u64(ell) << "\n";
  os << "k=" << format_u64(k) << "\n";
  os << "s=" << format_u64(s) << "\n";
  if (t.has_value()) os << "t=" << format_u64(*t) << "\n";
  return os.str();
}

void ExperimentConfig::check() const {
  if (mode != "faithful" && mode != "aggregate") {
    throw std::invalid_argument("config: mode must be faithful or aggregate");
  }
  if (format != "csv" && format != "json") {
    throw std::invalid_argument("config: format must be csv or json");
  }
  if (!(epsilon > 0.0)) throw std::invalid_argument("config: epsilon must be positive");
  if (!(delta > 0.0)) throw std::invalid_argument("config: delta must be positive");
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("config: beta must lie in (0,1)");
  if (n == 0) throw std::invalid_argument("config: n must be >= 1");
  if (d == 0) throw std::invalid_argument("config: d must be >= 1");
  if (trials == 0) throw std::invalid_argument("config: trials must be >= 1");
}

}  // namespace shuffledp
