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

#ifndef SHUFFLEDP_RANDOMIZER_LAW_HPP_
#define SHUFFLEDP_RANDOMIZER_LAW_HPP_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "shuffledp/core.hpp"

namespace shuffledp {

// Explicit distribution of a randomizer with finite input and output spaces:
// for every input value, the list of (message vector, probability) pairs.
// Enables exact enumeration of shuffled transcript laws.
struct FiniteRandomizerLaw {
  std::map<std::uint64_t, std::vector<std::pair<MessageVector, double>>> by_input;

  // Throws unless every conditional law sums to 1 within 1e-12 with
  // nonnegative probabilities.
  void validate() const;

  // Largest number of messages any support vector carries.
  std::size_t max_messages() const;
};

// Canonical multiset encoding used as a map key: sorted (value, count) pairs.
using MultisetKey = std::vector<std::pair<Message, std::uint64_t>>;

MultisetKey multiset_key(const MessageMultiset& ms);

// Distribution over shuffled transcripts (message multisets).
using MultisetLaw = std::map<MultisetKey, double>;

// Exact law of the shuffled transcript when input_counts[v] users hold value
// v and each applies the given randomizer independently.
MultisetLaw shuffled_multiset_law(const FiniteRandomizerLaw& law,
                                  const std::map<std::uint64_t, std::uint64_t>& input_counts);

}  // namespace shuffledp

#endif  // SHUFFLEDP_RANDOMIZER_LAW_HPP_
