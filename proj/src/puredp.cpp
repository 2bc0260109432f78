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

#include "shuffledp/puredp.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace shuffledp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

MessageVector pattern_to_messages(std::uint32_t pattern) {
  MessageVector mv;
  mv.messages.reserve(4);
  for (int bit = 3; bit >= 0; --bit) {
    mv.messages.push_back((pattern >> bit) & 1u);
  }
  return mv;
}

// The 10 four-bit patterns whose popcount differs from 2, ascending.
std::vector<std::uint32_t> gap_patterns() {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < 16; ++v) {
    if (std::popcount(v) != 2) out.push_back(v);
  }
  return out;
}

}  // namespace

MessageVector r_infinity(std::uint64_t x) {
  if (x > 1) throw std::invalid_argument("r_infinity: input must be 0 or 1");
  MessageVector mv;
  mv.messages = {x, 1 - x};
  return mv;
}

FiniteRandomizerLaw r_infinity_law() {
  FiniteRandomizerLaw law;
  law.by_input[0] = {{r_infinity(0), 1.0}};
  law.by_input[1] = {{r_infinity(1), 1.0}};
  return law;
}

MessageVector r_gap(std::uint64_t x, RngStream& rng) {
  if (x > 1) throw std::invalid_argument("r_gap: input must be 0 or 1");
  if (x == 0) {
    return pattern_to_messages(static_cast<std::uint32_t>(rng.uniform_int(16)));
  }
  const auto patterns = gap_patterns();
  return pattern_to_messages(patterns[rng.uniform_int(patterns.size())]);
}

FiniteRandomizerLaw r_gap_law() {
  FiniteRandomizerLaw law;
  for (std::uint32_t v = 0; v < 16; ++v) {
    law.by_input[0].emplace_back(pattern_to_messages(v), 1.0 / 16.0);
  }
  for (std::uint32_t v : gap_patterns()) {
    law.by_input[1].emplace_back(pattern_to_messages(v), 1.0 / 10.0);
  }
  return law;
}

Pmf r_gap_count_law(std::uint64_t x) {
  if (x > 1) throw std::invalid_argument("r_gap_count_law: input must be 0 or 1");
  if (x == 0) {
    const double mass[] = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};
    return Pmf::from_mass(0, mass);
  }
  const double mass[] = {1.0 / 10, 4.0 / 10, 0.0, 4.0 / 10, 1.0 / 10};
  return Pmf::from_mass(0, mass);
}

Pmf r_gap_shuffled_count_law(std::uint64_t ones, std::uint64_t n) {
  if (ones > n || n == 0) throw std::invalid_argument("r_gap_shuffled_count_law: need 0 <= ones <= n, n >= 1");
  const Pmf zero_law = r_gap_count_law(0);
  const Pmf one_law = r_gap_count_law(1);
  Pmf total = ones > 0 ? one_law : zero_law;
  for (std::uint64_t i = 1; i < n; ++i) {
    total = convolve(total, i < ones ? one_law : zero_law);
  }
  return total;
}

std::set<std::uint64_t> count_support_reachability(const std::set<std::uint64_t>& values,
                                                   std::uint64_t n) {
  if (values.empty() || n == 0) {
    throw std::invalid_argument("count_support_reachability: empty values or n == 0");
  }
  std::set<std::uint64_t> reach = values;
  for (std::uint64_t i = 1; i < n; ++i) {
    std::set<std::uint64_t> next;
    for (auto a : reach) {
      for (auto v : values) next.insert(a + v);
    }
    reach = std::move(next);
  }
  return reach;
}

double pure_dp_max_ratio(const Pmf& P, const Pmf& Q) {
  double worst = 0.0;
  const std::int64_t lo = std::min(P.min_value(), Q.min_value());
  const std::int64_t hi = std::max(P.max_value(), Q.max_value());
  for (std::int64_t y = lo; y <= hi; ++y) {
    const double lp = P.log_mass_at(y);
    const double lq = Q.log_mass_at(y);
    if (lp == kNegInf && lq == kNegInf) continue;
    if (lp == kNegInf || lq == kNegInf) return kInf;
    worst = std::max(worst, std::fabs(lp - lq));
  }
  return worst;
}

double multiset_law_max_log_ratio(const MultisetLaw& P, const MultisetLaw& Q) {
  double worst = 0.0;
  for (const auto& [key, p] : P) {
    if (p == 0.0) continue;
    auto it = Q.find(key);
    if (it == Q.end() || it->second == 0.0) return kInf;
    worst = std::max(worst, std::fabs(std::log(p / it->second)));
  }
  for (const auto& [key, q] : Q) {
    if (q == 0.0) continue;
    auto it = P.find(key);
    if (it == P.end() || it->second == 0.0) return kInf;
  }
  return worst;
}

std::vector<Message> permute_messages(std::span<const Message> in,
                                      std::span<const std::size_t> perm) {
  if (in.size() != perm.size()) throw std::invalid_argument("permute_messages: size mismatch");
  std::vector<Message> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[perm[i]];
  return out;
}

MessageVector sample_from_law(const FiniteRandomizerLaw& law, std::uint64_t x,
                              RngStream& rng) {
  auto it = law.by_input.find(x);
  if (it == law.by_input.end()) throw std::invalid_argument("sample_from_law: input not in law");
  const double u = rng.next_double();
  double cum = 0.0;
  for (const auto& [mv, prob] : it->second) {
    cum += prob;
    if (u < cum) return mv;
  }
  return it->second.back().first;  // guards against cum rounding just below 1
}

}  // namespace shuffledp
