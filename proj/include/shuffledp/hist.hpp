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

#ifndef SHUFFLEDP_HIST_HPP_
#define SHUFFLEDP_HIST_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "shuffledp/core.hpp"
#include "shuffledp/zsum.hpp"

namespace shuffledp {

// Frequency-vector protocol over the value universe {1..d}: one counting
// execution per bin, with the bin label as the message value.  A user with
// value x contributes bit 1[x == j] plus Bernoulli(p) noise to every bin j.
struct HistParams {
  std::uint64_t d = 0;
  ZsumParams zsum;
};

HistParams make_hist_params(std::uint64_t d, const ProtocolParams& params);

struct HistogramEstimate {
  std::vector<double> estimates;  // index j-1 holds bin j
};

struct TrueHistogram {
  std::vector<double> frequencies;  // index j-1 holds bin j
};

// Messages for one user: for every bin j, b_j + z_j copies of message j,
// where b is the one-hot encoding of x and z_j ~ Bernoulli(p) independently.
MessageVector hist_randomize(std::uint64_t x, const HistParams& hp, RngStream& rng);

Randomizer hist_randomizer(const HistParams& hp);

// Per-bin counting estimates from the full message multiset.
HistogramEstimate hist_analyze(const MessageMultiset& ms, const HistParams& hp);

// Samples the analyzer's output law directly from the true bin counts:
// bin j's message total is counts[j] + Binomial(n, p).  Bins with a zero
// true count are deterministically estimated as 0 and consume no
// randomness; bin noise draws are keyed by the bin's rank among nonzero
// bins, so the output is invariant to d for fixed nonzero counts and seed.
HistogramEstimate aggregate_simulate(std::span<const std::uint64_t> true_counts,
                                     const HistParams& hp, RngStream& rng);

TrueHistogram true_histogram(const Dataset& data);

// |estimate_j - frequency_j| for a 1-indexed bin j.
double per_query_error(const HistogramEstimate& est, const TrueHistogram& truth,
                       std::uint64_t j);

// max_j |estimate_j - frequency_j|.
double simultaneous_error(const HistogramEstimate& est, const TrueHistogram& truth);

// Error bound holding for all bins at once with probability >= 1 - beta.
// Requires beta >= n * delta^25; derived from the per-bin bound at beta/n
// because at most n bins have nonzero frequency and the rest are exact.
double hist_simultaneous_alpha(const ProtocolParams& params, double beta);

// One end-to-end run with per-message fidelity.  Message volume scales with
// n * d, so this is intended for small d; use aggregate_simulate otherwise.
HistogramEstimate run_hist_protocol(const Dataset& data, const HistParams& hp,
                                    RngStream& rng,
                                    ShuffleMode mode = ShuffleMode::kCounts);

// Randomized-response baseline: report the true value with probability
// e^eps / (e^eps + d - 1), otherwise a uniform other value; the analyzer
// inverts the response matrix, so estimates are unbiased but unclamped.
Message local_rr_randomize(std::uint64_t x, double epsilon, std::uint64_t d,
                           RngStream& rng);

HistogramEstimate local_rr_analyze(std::span<const Message> reports, double epsilon,
                                   std::uint64_t d);

HistogramEstimate run_local_rr(const Dataset& data, double epsilon, RngStream& rng);

}  // namespace shuffledp

#endif  // SHUFFLEDP_HIST_HPP_
