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

#ifndef SHUFFLEDP_RNG_HPP_
#define SHUFFLEDP_RNG_HPP_

#include <cstdint>
#include <vector>

namespace shuffledp {

// Mixes a 64-bit value through the splitmix64 finalizer.  Used to derive
// well-separated child seeds from (seed, index) pairs.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic random stream over a counter-based SplitMix64 engine.  A
// stream is identified by its seed; child(i) is a function of (seed, i)
// only, so substreams are reproducible no matter how much of the parent
// stream has already been consumed.  Construction is O(1), which lets every
// user of every trial own an independent substream cheaply.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double next_double();

  bool bernoulli(double p);

  // Uniform on {0, ..., bound - 1} via rejection; exact for any bound >= 1.
  std::uint64_t uniform_int(std::uint64_t bound);

  RngStream child(std::uint64_t index) const;

  // Fisher-Yates permutation of {0, ..., n - 1}; all n! outcomes equally
  // likely because uniform_int is exact.
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

// Samples Binomial(n, p) by inversion over the exact probability table.
// Intended for the moderate n used in simulations (table is O(n)).
class BinomialSampler {
 public:
  BinomialSampler(std::uint64_t n, double p);

  std::uint64_t n() const { return n_; }
  double p() const { return p_; }
  std::uint64_t sample(RngStream& rng) const;

 private:
  std::uint64_t n_;
  double p_;
  std::vector<double> cdf_;
};

}  // namespace shuffledp

#endif  // SHUFFLEDP_RNG_HPP_
