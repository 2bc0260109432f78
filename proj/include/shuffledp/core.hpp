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

#ifndef SHUFFLEDP_CORE_HPP_
#define SHUFFLEDP_CORE_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "shuffledp/rng.hpp"

namespace shuffledp {

inline constexpr const char* kVersion = "0.1.0";

// Privacy/accuracy parameters shared by the counting protocols.  Validity
// requires epsilon, delta in (0, 1] and n >= (100 / epsilon^2) * ln(2/delta),
// which keeps the per-user blanket probability p inside (1/2, 1).
struct ProtocolParams {
  double epsilon = 1.0;
  double delta = 0.1;
  std::uint64_t n = 0;
};

// Least n accepted by validate_params for the given epsilon, delta.
double min_required_n(double epsilon, double delta);

// Returns a list of violated conditions; empty means the params are valid.
std::vector<std::string> validate_params(const ProtocolParams& params);

// Throws std::invalid_argument listing every violation.
void require_valid(const ProtocolParams& params);

using Message = std::uint64_t;

// Ordered message list emitted by one user's randomizer.
struct MessageVector {
  std::vector<Message> messages;

  bool operator==(const MessageVector&) const = default;
  auto operator<=>(const MessageVector&) const = default;
};

// Canonical multiset of messages: value -> multiplicity, plus total size.
// This is the exact information a shuffler hands to the analyzer.
struct MessageMultiset {
  std::map<Message, std::uint64_t> counts;
  std::uint64_t total = 0;

  void add(Message value, std::uint64_t multiplicity = 1);
  std::uint64_t count(Message value) const;
  static MessageMultiset from_messages(std::span<const Message> messages);

  bool operator==(const MessageMultiset&) const = default;
};

enum class Universe { kBinary, kCategorical };

// One row per user.  Binary datasets hold values in {0,1}; categorical
// datasets hold values in {1, ..., d}.
struct Dataset {
  std::vector<std::uint64_t> rows;
  std::uint64_t d = 2;
  Universe universe = Universe::kCategorical;

  static Dataset binary(std::vector<std::uint64_t> rows);
  static Dataset categorical(std::vector<std::uint64_t> rows, std::uint64_t d);

  std::uint64_t n() const { return rows.size(); }
};

using Randomizer = std::function<MessageVector(std::uint64_t, RngStream&)>;

// Flattens per-user message vectors into the canonical multiset.
MessageMultiset shuffle(std::span<const MessageVector> per_user);

// Flattens and then applies a uniformly random permutation.  Carries the
// same information as shuffle(); exists so both representations can be
// exercised and compared.
std::vector<Message> shuffle_to_vector(std::span<const MessageVector> per_user,
                                       RngStream& rng);

enum class ShuffleMode { kCounts, kExplicitPermutation };

namespace detail {
std::vector<MessageVector> run_randomizers(const Randomizer& randomizer,
                                           const Dataset& data, RngStream& rng);
}  // namespace detail

// Runs randomize -> shuffle -> analyze.  User i's randomizer draws from the
// independent substream rng.child(i); the explicit-permutation mode consumes
// the parent stream for the permutation.  Both modes feed the analyzer the
// same multiset, so outputs agree exactly for a fixed seed.
template <typename Analyzer>
auto execute_shuffled(const Randomizer& randomizer, Analyzer&& analyzer,
                      const Dataset& data, RngStream& rng,
                      ShuffleMode mode = ShuffleMode::kCounts) {
  auto per_user = detail::run_randomizers(randomizer, data, rng);
  if (mode == ShuffleMode::kExplicitPermutation) {
    auto flat = shuffle_to_vector(per_user, rng);
    return analyzer(MessageMultiset::from_messages(flat));
  }
  return analyzer(shuffle(per_user));
}

// Runs randomize -> analyze with per-user attribution preserved (no shuffler
// in between).  The analyzer receives the ordered per-user message vectors.
template <typename Analyzer>
auto execute_local(const Randomizer& randomizer, Analyzer&& analyzer,
                   const Dataset& data, RngStream& rng) {
  auto per_user = detail::run_randomizers(randomizer, data, rng);
  return analyzer(per_user, rng);
}

}  // namespace shuffledp

#endif  // SHUFFLEDP_CORE_HPP_
