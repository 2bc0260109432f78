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

#ifndef SHUFFLEDP_PRIVACY_HPP_
#define SHUFFLEDP_PRIVACY_HPP_

#include <cstdint>

#include "shuffledp/core.hpp"
#include "shuffledp/pmf.hpp"
#include "shuffledp/randomizer_law.hpp"

namespace shuffledp {

enum class PrivacyMethod { kExactDivergence, kSmoothnessBound, kBruteForce };

// Which neighboring change attained the reported divergence: the differing
// user raising the true sum by one (kAdd) or lowering it (kRemove).
enum class NeighborDirection { kAdd, kRemove };

struct PrivacyReport {
  double epsilon_target = 0.0;
  double delta_target = 0.0;
  double delta_achieved = 0.0;
  NeighborDirection direction = NeighborDirection::kAdd;
  PrivacyMethod method = PrivacyMethod::kExactDivergence;

  bool pass() const { return delta_achieved <= delta_target; }
};

// sum_y max(P(y) - e^epsilon * Q(y), 0).  Nonincreasing in epsilon; this is
// the tight delta for which P, Q are (epsilon, delta)-indistinguishable in
// the P-to-Q direction.
double hockey_stick(const Pmf& P, const Pmf& Q, double epsilon);

// Same sum accumulated entirely in long double; used to confirm the default
// double accumulation agrees to < 1e-9.
double hockey_stick_precise(const Pmf& P, const Pmf& Q, double epsilon);

// max over both orderings.
double hockey_stick_max(const Pmf& P, const Pmf& Q, double epsilon);

// Exact divergence between neighboring count laws s + Binomial(n, p) and
// s + 1 + Binomial(n, p); max over both orderings.  p may be any value in
// (0, 1), which permits checking deliberately out-of-contract regimes.
double zsum_privacy_delta_value(std::uint64_t n, double p, double epsilon,
                                NeighborDirection* worst = nullptr);

// Exact divergence for the counting protocol at its own parameters,
// evaluated against epsilon_target.
PrivacyReport zsum_privacy_delta(const ProtocolParams& params, double epsilon_target);

// Least delta for which D satisfies the shifted-ratio smoothness property
// with shift radius k: for every nonzero shift k' in [-k, k], the mass of
// outcomes y with D(y) / D(y + k') >= e^{|k'| epsilon} is at most delta.
// A zero denominator against positive numerator counts as a bad outcome.
double smoothness_min_delta(const Pmf& D, double epsilon, std::int64_t k);

// Closed-form smoothness certificate for Binomial(n, gamma).
struct SmoothnessBound {
  double epsilon = 0.0;   // ln((1 + alpha) / (1 - alpha))
  double delta = 0.0;     // exp(-alpha^2 gamma n / 8) + exp(-alpha^2 gamma n / (8 + 2 alpha)), clamped to <= 1
  double k_limit = 0.0;   // shifts up to alpha gamma n / 2 are covered

  bool covers(std::int64_t k) const {
    return k >= 1 && static_cast<double>(k) <= k_limit;
  }
};

// Requires gamma in [0, 1/2] and alpha in [0, 1].
SmoothnessBound binomial_smoothness_bound(std::uint64_t n, double gamma, double alpha);

// Negated-sum route: the count law sum + Binomial(n, p) is a post-processing
// of -sum + Binomial(n, gamma) with gamma = 1 - p, so certifying the latter
// certifies the protocol.  alpha = (e^eps - 1)/(e^eps + 1) makes the
// certificate's epsilon equal params.epsilon exactly.
struct MnegReport {
  double gamma = 0.0;
  double alpha = 0.0;
  bool gamma_in_range = false;   // gamma <= 1/2, needed by the certificate
  SmoothnessBound bound;
  double smooth_exact = 0.0;     // least smoothness delta of Binomial(n, gamma) at k = 1
  double exact_delta = 0.0;      // exact divergence between the shifted laws
  bool chain_ok = false;         // exact_delta <= smooth_exact <= bound.delta
  bool pass = false;             // bound.delta <= params.delta and k = 1 covered
};

MnegReport mneg_privacy_check(const ProtocolParams& params);

// delta between two transcript laws at a fixed epsilon (one direction).
double multiset_law_hockey_stick(const MultisetLaw& P, const MultisetLaw& Q,
                                 double epsilon);

// Exact worst-case divergence of the shuffled protocol over every pair of
// neighboring n-user datasets (both orderings).  Enumerates all input count
// vectors; exponential in the input alphabet, intended for small n.
double brute_force_shuffled_dp(const FiniteRandomizerLaw& law, std::uint64_t n,
                               double epsilon);

}  // namespace shuffledp

#endif  // SHUFFLEDP_PRIVACY_HPP_
