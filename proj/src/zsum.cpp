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

#include "shuffledp/zsum.hpp"

#include <cmath>
#include <stdexcept>

namespace shuffledp {

double compute_p(const ProtocolParams& params) {
  require_valid(params);
  const double n = static_cast<double>(params.n);
  return 1.0 - 50.0 / (params.epsilon * params.epsilon * n) * std::log(2.0 / params.delta);
}

ZsumParams make_zsum_params(const ProtocolParams& params) {
  return ZsumParams{params, compute_p(params)};
}

MessageVector zsum_message(std::uint64_t x, std::uint64_t z) {
  if (x > 1 || z > 1) throw std::invalid_argument("zsum_message: bits must be 0 or 1");
  MessageVector mv;
  mv.messages.assign(x + z, Message{1});
  return mv;
}

MessageVector zsum_randomize(std::uint64_t x, const ZsumParams& zp, RngStream& rng) {
  if (x > 1) throw std::invalid_argument("zsum_randomize: input must be 0 or 1");
  const std::uint64_t z = rng.bernoulli(zp.p) ? 1 : 0;
  return zsum_message(x, z);
}

Randomizer zsum_randomizer(const ZsumParams& zp) {
  return [zp](std::uint64_t x, RngStream& rng) { return zsum_randomize(x, zp, rng); };
}

double zsum_analyze(std::uint64_t total, const ZsumParams& zp) {
  const std::uint64_t n = zp.base.n;
  if (total > 2 * n) throw std::invalid_argument("zsum_analyze: total exceeds 2n");
  const double normalized = static_cast<double>(total) / static_cast<double>(n);
  if (normalized > 1.0) return normalized - zp.p;
  return 0.0;
}

double zsum_analyze(const MessageMultiset& ms, const ZsumParams& zp) {
  for (const auto& [value, count] : ms.counts) {
    (void)count;
    if (value != 1) throw std::invalid_argument("zsum_analyze: unexpected message value");
  }
  return zsum_analyze(ms.total, zp);
}

double zsum_alpha(const ProtocolParams& params, double beta) {
  require_valid(params);
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("zsum_alpha: beta outside (0,1)");
  if (beta < std::pow(params.delta, 25.0)) {
    throw std::invalid_argument("zsum_alpha: beta below delta^25");
  }
  const double n = static_cast<double>(params.n);
  const double eps = params.epsilon;
  const double log_2_delta = std::log(2.0 / params.delta);
  const double log_2_beta = std::log(2.0 / beta);
  return 50.0 / (eps * eps * n) * log_2_delta +
         std::sqrt(200.0 * log_2_delta * log_2_beta) / (eps * n);
}

double run_zsum_protocol(const Dataset& data, const ZsumParams& zp, RngStream& rng,
                         ShuffleMode mode) {
  if (data.universe != Universe::kBinary) {
    throw std::invalid_argument("run_zsum_protocol: dataset must be binary");
  }
  if (data.n() != zp.base.n) {
    throw std::invalid_argument("run_zsum_protocol: dataset size differs from params n");
  }
  return execute_shuffled(
      zsum_randomizer(zp),
      [&zp](const MessageMultiset& ms) { return zsum_analyze(ms, zp); }, data, rng,
      mode);
}

}  // namespace shuffledp
