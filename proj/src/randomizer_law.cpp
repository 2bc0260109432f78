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

#include "shuffledp/randomizer_law.hpp"

#include <cmath>
#include <stdexcept>

namespace shuffledp {

void FiniteRandomizerLaw::validate() const {
  if (by_input.empty()) throw std::invalid_argument("randomizer law: no inputs");
  for (const auto& [value, dist] : by_input) {
    (void)value;
    if (dist.empty()) throw std::invalid_argument("randomizer law: empty conditional");
    long double total = 0.0L;
    for (const auto& [mv, prob] : dist) {
      (void)mv;
      if (prob < 0.0) throw std::invalid_argument("randomizer law: negative probability");
      total += prob;
    }
    if (std::fabs(static_cast<double>(total) - 1.0) > 1e-12) {
      throw std::invalid_argument("randomizer law: conditional does not sum to 1");
    }
  }
}

std::size_t FiniteRandomizerLaw::max_messages() const {
  std::size_t most = 0;
  for (const auto& [value, dist] : by_input) {
    (void)value;
    for (const auto& [mv, prob] : dist) {
      (void)prob;
      most = std::max(most, mv.messages.size());
    }
  }
  return most;
}

MultisetKey multiset_key(const MessageMultiset& ms) {
  MultisetKey key;
  key.reserve(ms.counts.size());
  for (const auto& [value, count] : ms.counts) key.emplace_back(value, count);
  return key;
}

MultisetLaw shuffled_multiset_law(const FiniteRandomizerLaw& law,
                                  const std::map<std::uint64_t, std::uint64_t>& input_counts) {
  law.validate();
  MultisetLaw current;
  current[MultisetKey{}] = 1.0;
  for (const auto& [value, user_count] : input_counts) {
    auto it = law.by_input.find(value);
    if (it == law.by_input.end()) {
      throw std::invalid_argument("shuffled_multiset_law: input value not in law");
    }
    for (std::uint64_t u = 0; u < user_count; ++u) {
      MultisetLaw next;
      for (const auto& [key, prob] : current) {
        for (const auto& [mv, mv_prob] : it->second) {
          if (mv_prob == 0.0) continue;
          MessageMultiset ms;
          for (const auto& [v, c] : key) ms.add(v, c);
          for (Message m : mv.messages) ms.add(m);
          next[multiset_key(ms)] += prob * mv_prob;
        }
      }
      current = std::move(next);
    }
  }
  return current;
}

}  // namespace shuffledp
