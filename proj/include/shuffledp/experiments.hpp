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

#ifndef SHUFFLEDP_EXPERIMENTS_HPP_
#define SHUFFLEDP_EXPERIMENTS_HPP_

#include "shuffledp/config.hpp"
#include "shuffledp/result_table.hpp"

namespace shuffledp {

// Every experiment is a pure function of its config: tables carry no
// timestamps or host data, so equal configs give byte-identical output.

// Counting-protocol accuracy over all-zeros, all-ones, and half-ones inputs.
ResultTable run_zsum(const ExperimentConfig& config);

// Histogram simultaneous-error sweep, shuffled vs the local randomized-
// response baseline.  Aggregate mode sweeps d in {100, 10^4, 10^6};
// faithful mode runs config.d (capped at 2000) with per-message fidelity.
ResultTable run_hist(const ExperimentConfig& config);

// Exact divergence checks, the closed-form smoothness certificate, and
// small-n brute-force cross-checks.
ResultTable verify_privacy(const ExperimentConfig& config);

// Support identification over {1..d} with h hidden values.
ResultTable solve_support_experiment(const ExperimentConfig& config);

// Two-party pointer chasing on permutations of {1..ell}.
ResultTable solve_pc_experiment(const ExperimentConfig& config);

// Multi-party pointer jumping on the s-ary tree of height h.
ResultTable solve_mpj_experiment(const ExperimentConfig& config);

// Shuffled-vs-local gap demos for the deterministic pair randomizer and the
// four-bit gap randomizer.
ResultTable puredp_demo(const ExperimentConfig& config);

}  // namespace shuffledp

#endif  // SHUFFLEDP_EXPERIMENTS_HPP_
