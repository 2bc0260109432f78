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

#ifndef SHUFFLEDP_CONFIG_HPP_
#define SHUFFLEDP_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "shuffledp/core.hpp"

namespace shuffledp {

inline constexpr std::uint64_t kDefaultSeed = 20260815;

// Experiment settings shared by the command-line subcommands.  The file form
// is flat "key=value" lines ('#' starts a comment); serialization and
// parsing round-trip losslessly, including doubles.
struct ExperimentConfig {
  double epsilon = 1.0;
  double delta = 0.1;
  std::uint64_t n = 1000;
  std::uint64_t d = 3;
  double beta = 0.05;
  std::uint64_t trials = 200;
  std::uint64_t seed = kDefaultSeed;
  std::string mode = "aggregate";   // or "faithful"
  std::string format = "csv";       // or "json"
  std::string out;                  // empty writes to stdout

  // Solver-specific knobs.
  std::uint64_t h = 4;
  std::uint64_t ell = 8;
  std::uint64_t k = 3;
  std::uint64_t s = 3;
  std::optional<std::uint64_t> t;   // recovery threshold override

  ProtocolParams protocol() const { return ProtocolParams{epsilon, delta, n}; }

  // Throws std::invalid_argument on unknown keys or malformed values.
  static ExperimentConfig from_file(const std::string& path);
  static ExperimentConfig from_string(const std::string& text);

  std::string to_file_string() const;

  // Checks enum-like fields (mode, format) and positivity; protocol-level
  // validity is checked by the experiments that need it.
  void check() const;
};

}  // namespace shuffledp

#endif  // SHUFFLEDP_CONFIG_HPP_
