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

#ifndef SHUFFLEDP_APPS_HPP_
#define SHUFFLEDP_APPS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "shuffledp/biguint.hpp"
#include "shuffledp/core.hpp"
#include "shuffledp/zsum.hpp"

namespace shuffledp {

// Distributional problems solved through the private histogram: samples are
// drawn uniformly from a small hidden support inside a huge code universe,
// and the solver recovers every code whose estimated frequency clears a
// threshold.  Bins never sampled are estimated exactly 0, so only observed
// codes can be recovered and the universe size never enters the runtime.

// ---- support identification ----

struct SupportInstance {
  std::uint64_t d = 0;                  // universe {1..d}
  std::vector<std::uint64_t> support;   // h distinct values in {1..d}
};

void validate_instance(const SupportInstance& inst);

Dataset sample_instance(const SupportInstance& inst, std::uint64_t count, RngStream& rng);

// ---- two-party pointer chasing ----

struct PcInstance {
  std::uint32_t ell = 0;          // permutations act on {1..ell}
  std::vector<std::uint32_t> a;   // held by users with tag 1
  std::vector<std::uint32_t> b;   // held by users with tag 2
};

void validate_instance(const PcInstance& inst);

PcInstance random_pc_instance(std::uint32_t ell, RngStream& rng);

// k-step chase with strict alternation: a_1, b_{a_1}, a_{b_{a_1}}, ...
std::uint32_t chase_pointer(std::span<const std::uint32_t> a,
                            std::span<const std::uint32_t> b, std::uint32_t k);

// Codes live in [0, 2 * ell!): the tag in {1,2} and the permutation's
// factorial-base digits packed by mixed-radix folding.
BigUint pc_code_space(std::uint32_t ell);
BigUint pc_encode(std::uint32_t tag, std::span<const std::uint32_t> perm);
std::pair<std::uint32_t, std::vector<std::uint32_t>> pc_decode(const BigUint& code,
                                                               std::uint32_t ell);

std::vector<BigUint> sample_instance(const PcInstance& inst, std::uint64_t count,
                                     RngStream& rng);

// ---- multi-party pointer jumping ----

struct MpjInstance {
  std::uint32_t s = 0;  // tree arity
  std::uint32_t h = 0;  // number of levels
  // levels[i] holds s^i labels in {0..s-1}, one per node of level i.
  std::vector<std::vector<std::uint32_t>> levels;
};

void validate_instance(const MpjInstance& inst);

MpjInstance random_mpj_instance(std::uint32_t s, std::uint32_t h, RngStream& rng);

// Root-to-leaf label sequence: node pos at level i selects child pos*s+label.
std::vector<std::uint32_t> chase_path(const MpjInstance& inst);

// Codes enumerate (level, full label vector): level i occupies the block
// [offset_i, offset_i + s^(s^i)) and the labels are base-s digits.
BigUint mpj_code_space(std::uint32_t s, std::uint32_t h);
BigUint mpj_encode(std::uint32_t level, std::span<const std::uint32_t> labels,
                   std::uint32_t s, std::uint32_t h);
std::pair<std::uint32_t, std::vector<std::uint32_t>> mpj_decode(const BigUint& code,
                                                                std::uint32_t s,
                                                                std::uint32_t h);

std::vector<BigUint> sample_instance(const MpjInstance& inst, std::uint64_t count,
                                     RngStream& rng);

// ---- sample-size planning ----

// Least n with Pr[Binomial(n, 1/h) <= 2t] <= 1/(200h): enough draws that
// every support element is sampled more than 2t times except with
// probability 1/200 overall.
std::uint64_t required_samples(std::uint64_t h, std::uint64_t t);

// Default recovery threshold t = ceil(n * alpha) at per-bin failure rate
// beta = 1 / (400 * min(n, d)).
std::uint64_t default_threshold(const ProtocolParams& params, const BigUint& d);

struct SupportRunPlan {
  std::uint64_t t = 0;     // recovery threshold
  std::uint64_t n = 0;     // number of samples / users
  double beta = 0.0;       // per-bin failure rate backing t
};

// Joint fixed point of n -> t(n) -> required_samples(h, t); also enforces
// delta < (1/(200h))^(1/25) so the privacy failure mass stays negligible
// next to the sampling failure mass.
SupportRunPlan plan_support_run(std::uint64_t h, const BigUint& d, double epsilon,
                                double delta);

// ---- solvers ----

// Bins with estimate >= (t+1)/n, 1-indexed; the boundary is included.
std::set<std::uint64_t> select_support(std::span<const double> estimates,
                                       std::uint64_t n, std::uint64_t t);

// Runs the counting protocol on every observed code (noise streams keyed by
// the code's rank among observed codes) and thresholds the estimates.
std::set<BigUint> solve_support_codes(std::span<const BigUint> samples,
                                      const ProtocolParams& params, std::uint64_t t,
                                      RngStream& rng);

std::set<std::uint64_t> solve_support(const Dataset& data, const ProtocolParams& params,
                                      std::uint64_t t, RngStream& rng);

// Recovers both tagged permutations, then chases k pointers.  Empty when the
// support recovery does not yield exactly one permutation per tag.
std::optional<std::uint32_t> solve_pc(std::span<const BigUint> samples,
                                      const ProtocolParams& params, std::uint32_t k,
                                      std::uint32_t ell, std::uint64_t t, RngStream& rng);

// Recovers one level per height, then walks the tree.  Empty when any level
// is missing or duplicated.
std::optional<std::vector<std::uint32_t>> solve_mpj(std::span<const BigUint> samples,
                                                    const ProtocolParams& params,
                                                    std::uint32_t s, std::uint32_t h,
                                                    std::uint64_t t, RngStream& rng);

}  // namespace shuffledp

#endif  // SHUFFLEDP_APPS_HPP_
