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

#ifndef SHUFFLEDP_ZSUM_HPP_
#define SHUFFLEDP_ZSUM_HPP_

#include <cstdint>

#include "shuffledp/core.hpp"

namespace shuffledp {

// Blanket-noise counting protocol.  Every user holds a bit x and sends x + z
// copies of the message "1", where z ~ Bernoulli(p); the analyzer subtracts
// the expected noise level from the normalized count.
struct ZsumParams {
  ProtocolParams base;
  double p = 0.0;
};

// p = 1 - (50 / (epsilon^2 n)) * ln(2/delta).  Valid params force p in
// (1/2, 1).  Throws std::invalid_argument when validate_params rejects.
double compute_p(const ProtocolParams& params);

ZsumParams make_zsum_params(const ProtocolParams& params);

// The message vector for fixed bit x and noise bit z: x + z copies of 1.
MessageVector zsum_message(std::uint64_t x, std::uint64_t z);

MessageVector zsum_randomize(std::uint64_t x, const ZsumParams& zp, RngStream& rng);

Randomizer zsum_randomizer(const ZsumParams& zp);

// total is the number of received messages.  Output is total/n - p when that
// normalized count exceeds 1, and 0 otherwise (strictly greater; a count of
// exactly n yields 0).  Throws when total > 2n, which no transcript can reach.
double zsum_analyze(std::uint64_t total, const ZsumParams& zp);

// Multiset adapter; requires every message value to be 1.
double zsum_analyze(const MessageMultiset& ms, const ZsumParams& zp);

// High-probability error bound: with probability >= 1 - beta the estimate is
// within alpha of the true count mean.  Requires beta >= delta^25.
double zsum_alpha(const ProtocolParams& params, double beta);

// One end-to-end run over a binary dataset with data.n() == params.base.n.
double run_zsum_protocol(const Dataset& data, const ZsumParams& zp, RngStream& rng,
                         ShuffleMode mode = ShuffleMode::kCounts);

}  // namespace shuffledp

#endif  // SHUFFLEDP_ZSUM_HPP_
