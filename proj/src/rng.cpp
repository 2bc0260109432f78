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

#include "shuffledp/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace shuffledp {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), state_(splitmix64(seed)) {}

std::uint64_t RngStream::next_u64() {
  // Counter-based SplitMix64 step: O(1) stream construction matters because
  // every user of every trial gets a fresh child stream.
  const std::uint64_t out = splitmix64(state_);
  state_ += 0x9e3779b97f4a7c15ull;
  return out;
}

double RngStream::next_double() {
  // 53 high bits scaled by 2^-53; values lie on the exact double grid in [0,1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool RngStream::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bernoulli: p outside [0,1]");
  return next_double() < p;
}

std::uint64_t RngStream::uniform_int(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_int: zero bound");
  if ((bound & (bound - 1)) == 0) return next_u64() & (bound - 1);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

RngStream RngStream::child(std::uint64_t index) const {
  return RngStream(splitmix64(seed_) ^ splitmix64(splitmix64(index) + 0x5851f42d4c957f2dull));
}

std::vector<std::size_t> RngStream::permutation(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_int(i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

BinomialSampler::BinomialSampler(std::uint64_t n, double p) : n_(n), p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("BinomialSampler: p outside [0,1]");
  cdf_.resize(n + 1);
  if (p == 0.0 || p == 1.0) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      cdf_[k] = (p == 0.0 || k == n) ? 1.0 : 0.0;
    }
    return;
  }
  const double logp = std::log(p);
  const double log1p = std::log1p(-p);
  const double lgn = std::lgamma(static_cast<double>(n) + 1.0);
  long double acc = 0.0L;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double log_pmf = lgn - std::lgamma(kk + 1.0) -
                           std::lgamma(static_cast<double>(n - k) + 1.0) +
                           kk * logp + (static_cast<double>(n) - kk) * log1p;
    acc += std::exp(static_cast<long double>(log_pmf));
    cdf_[k] = static_cast<double>(acc);
  }
  cdf_[n] = 1.0;
}

std::uint64_t BinomialSampler::sample(RngStream& rng) const {
  const double u = rng.next_double();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) return n_;
  return static_cast<std::uint64_t>(it - cdf_.begin());
}

}  // namespace shuffledp
