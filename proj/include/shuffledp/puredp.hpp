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

#ifndef SHUFFLEDP_PUREDP_HPP_
#define SHUFFLEDP_PUREDP_HPP_

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "shuffledp/core.hpp"
#include "shuffledp/pmf.hpp"
#include "shuffledp/randomizer_law.hpp"

namespace shuffledp {

// Deterministic two-message randomizer sending {x, 1 - x}.  Every user's
// multiset is {0, 1}, so the shuffled transcript is constant (perfectly
// private) while no finite local ratio bound exists.
MessageVector r_infinity(std::uint64_t x);
FiniteRandomizerLaw r_infinity_law();

// Four-bit randomizer with a gap between shuffled and local guarantees:
// input 0 draws uniformly from all 16 patterns, input 1 uniformly from the
// 10 patterns whose bit sum differs from 2.
MessageVector r_gap(std::uint64_t x, RngStream& rng);
FiniteRandomizerLaw r_gap_law();

// Law of one user's bit sum: (1,4,6,4,1)/16 for x = 0, (1,4,0,4,1)/10 for x = 1.
Pmf r_gap_count_law(std::uint64_t x);

// Law of the total bit count when `ones` of the n users hold 1.
Pmf r_gap_shuffled_count_law(std::uint64_t ones, std::uint64_t n);

// n-fold sumset of a value set: every total reachable by summing n elements.
std::set<std::uint64_t> count_support_reachability(const std::set<std::uint64_t>& values,
                                                   std::uint64_t n);

// sup over outcomes of |ln(P/Q)|; +infinity when the supports differ.
double pure_dp_max_ratio(const Pmf& P, const Pmf& Q);
double multiset_law_max_log_ratio(const MultisetLaw& P, const MultisetLaw& Q);

// out[i] = in[perm[i]]; the deterministic core of the simulated shuffler.
std::vector<Message> permute_messages(std::span<const Message> in,
                                      std::span<const std::size_t> perm);

// Samples one message vector from a finite conditional law by inversion.
MessageVector sample_from_law(const FiniteRandomizerLaw& law, std::uint64_t x,
                              RngStream& rng);

template <typename Out>
struct LocalProtocol {
  Randomizer randomizer;
  std::function<Out(const std::vector<MessageVector>&, RngStream&)> analyzer;
};

// Local-model simulation of a single-message shuffled protocol: users run
// the unchanged randomizer and the analyzer permutes the received messages
// uniformly at random before applying the shuffled protocol's analyzer.
// Throws when some support vector carries more than one message, because
// then the per-user message counts leak through the local view.
template <typename Out>
LocalProtocol<Out> simulate_local_from_shuffled(
    const FiniteRandomizerLaw& law,
    std::function<Out(const std::vector<Message>&)> flat_analyzer) {
  law.validate();
  for (const auto& [value, dist] : law.by_input) {
    (void)value;
    for (const auto& [mv, prob] : dist) {
      (void)prob;
      if (mv.messages.size() != 1) {
        throw std::invalid_argument(
            "simulate_local_from_shuffled: randomizer must send exactly one message");
      }
    }
  }
  LocalProtocol<Out> protocol;
  protocol.randomizer = [law](std::uint64_t x, RngStream& rng) {
    return sample_from_law(law, x, rng);
  };
  protocol.analyzer = [flat_analyzer](const std::vector<MessageVector>& per_user,
                                      RngStream& rng) {
    std::vector<Message> flat;
    flat.reserve(per_user.size());
    for (const auto& mv : per_user) {
      if (mv.messages.size() != 1) {
        throw std::invalid_argument("simulated analyzer: expected one message per user");
      }
      flat.push_back(mv.messages[0]);
    }
    const auto perm = rng.permutation(flat.size());
    return flat_analyzer(permute_messages(flat, perm));
  };
  return protocol;
}

}  // namespace shuffledp

#endif  // SHUFFLEDP_PUREDP_HPP_
