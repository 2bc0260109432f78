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

#include "shuffledp/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "shuffledp/zsum.hpp"

namespace shuffledp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// One hockey-stick term written as P(y) * (1 - e^{epsilon + lq - lp}), which
// keeps relative accuracy when P(y) is deep in a tail.
template <typename Acc>
double hockey_stick_impl(const Pmf& P, const Pmf& Q, double epsilon) {
  Acc acc = 0;
  for (std::int64_t y = P.min_value(); y <= P.max_value(); ++y) {
    const double lp = P.log_mass_at(y);
    if (lp == kNegInf) continue;
    const double lq = Q.log_mass_at(y);
    if (lq == kNegInf) {
      acc += static_cast<Acc>(std::exp(lp));
      continue;
    }
    const double r = epsilon + lq - lp;
    if (r >= 0.0) continue;
    acc += static_cast<Acc>(std::exp(lp)) * static_cast<Acc>(-std::expm1(r));
  }
  return static_cast<double>(acc);
}

}  // namespace

double hockey_stick(const Pmf& P, const Pmf& Q, double epsilon) {
  if (epsilon < 0.0) throw std::invalid_argument("hockey_stick: negative epsilon");
  return hockey_stick_impl<double>(P, Q, epsilon);
}

double hockey_stick_precise(const Pmf& P, const Pmf& Q, double epsilon) {
  if (epsilon < 0.0) throw std::invalid_argument("hockey_stick: negative epsilon");
  return hockey_stick_impl<long double>(P, Q, epsilon);
}

double hockey_stick_max(const Pmf& P, const Pmf& Q, double epsilon) {
  return std::max(hockey_stick(P, Q, epsilon), hockey_stick(Q, P, epsilon));
}

double zsum_privacy_delta_value(std::uint64_t n, double p, double epsilon,
                                NeighborDirection* worst) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("zsum_privacy_delta_value: p outside (0,1)");
  const Pmf noise = binomial_pmf(n, p);
  const Pmf raised = noise.shifted(1);
  const double d_add = hockey_stick(raised, noise, epsilon);
  const double d_remove = hockey_stick(noise, raised, epsilon);
  if (worst != nullptr) {
    *worst = d_add >= d_remove ? NeighborDirection::kAdd : NeighborDirection::kRemove;
  }
  return std::max(d_add, d_remove);
}

PrivacyReport zsum_privacy_delta(const ProtocolParams& params, double epsilon_target) {
  const double p = compute_p(params);
  PrivacyReport report;
  report.epsilon_target = epsilon_target;
  report.delta_target = params.delta;
  report.method = PrivacyMethod::kExactDivergence;
  report.delta_achieved = zsum_privacy_delta_value(params.n, p, epsilon_target, &report.direction);
  return report;
}

double smoothness_min_delta(const Pmf& D, double epsilon, std::int64_t k) {
  if (epsilon < 0.0) throw std::invalid_argument("smoothness_min_delta: negative epsilon");
  if (k < 1) throw std::invalid_argument("smoothness_min_delta: k must be >= 1");
  double worst = 0.0;
  for (std::int64_t shift = -k; shift <= k; ++shift) {
    if (shift == 0) continue;
    const double threshold = static_cast<double>(std::llabs(shift)) * epsilon;
    long double bad_mass = 0.0L;
    for (std::int64_t y = D.min_value(); y <= D.max_value(); ++y) {
      const double ly = D.log_mass_at(y);
      if (ly == kNegInf) continue;
      const double ld = D.log_mass_at(y + shift);
      const bool bad = (ld == kNegInf) || (ly - ld >= threshold);
      if (bad) bad_mass += static_cast<long double>(D.mass_at(y));
    }
    worst = std::max(worst, static_cast<double>(bad_mass));
  }
  return std::min(worst, 1.0);
}

SmoothnessBound binomial_smoothness_bound(std::uint64_t n, double gamma, double alpha) {
  if (!(gamma >= 0.0 && gamma <= 0.5)) {
    throw std::invalid_argument("binomial_smoothness_bound: gamma outside [0, 1/2]");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("binomial_smoothness_bound: alpha outside [0, 1]");
  }
  SmoothnessBound b;
  b.epsilon = std::log((1.0 + alpha) / (1.0 - alpha));
  const double a2gn = alpha * alpha * gamma * static_cast<double>(n);
  b.delta = std::min(1.0, std::exp(-a2gn / 8.0) + std::exp(-a2gn / (8.0 + 2.0 * alpha)));
  b.k_limit = alpha * gamma * static_cast<double>(n) / 2.0;
  return b;
}

MnegReport mneg_privacy_check(const ProtocolParams& params) {
  const double p = compute_p(params);
  MnegReport report;
  report.gamma = 1.0 - p;
  report.gamma_in_range = report.gamma <= 0.5;
  const double e = std::exp(params.epsilon);
  report.alpha = (e - 1.0) / (e + 1.0);
  report.bound = binomial_smoothness_bound(params.n, report.gamma, report.alpha);
  const Pmf noise = binomial_pmf(params.n, report.gamma);
  report.smooth_exact = smoothness_min_delta(noise, params.epsilon, 1);
  report.exact_delta = hockey_stick_max(noise.shifted(1), noise, params.epsilon);
  report.chain_ok = report.exact_delta <= report.smooth_exact &&
                    report.smooth_exact <= report.bound.delta;
  report.pass = report.gamma_in_range && report.bound.covers(1) &&
                report.bound.delta <= params.delta;
  return report;
}

double multiset_law_hockey_stick(const MultisetLaw& P, const MultisetLaw& Q,
                                 double epsilon) {
  if (epsilon < 0.0) throw std::invalid_argument("multiset_law_hockey_stick: negative epsilon");
  const double e = std::exp(epsilon);
  long double acc = 0.0L;
  for (const auto& [key, prob] : P) {
    auto it = Q.find(key);
    const double q = it == Q.end() ? 0.0 : it->second;
    const double term = prob - e * q;
    if (term > 0.0) acc += term;
  }
  return static_cast<double>(acc);
}

double brute_force_shuffled_dp(const FiniteRandomizerLaw& law, std::uint64_t n,
                               double epsilon) {
  law.validate();
  if (n == 0) throw std::invalid_argument("brute_force_shuffled_dp: n must be >= 1");
  std::vector<std::uint64_t> inputs;
  for (const auto& [value, dist] : law.by_input) {
    (void)dist;
    inputs.push_back(value);
  }
  if (inputs.size() < 2) {
    throw std::invalid_argument("brute_force_shuffled_dp: need at least two input values");
  }

  // All ways to split n users across the input values.
  std::vector<std::vector<std::uint64_t>> count_vectors;
  std::vector<std::uint64_t> current(inputs.size(), 0);
  auto enumerate = [&](auto&& self, std::size_t idx, std::uint64_t remaining) -> void {
    if (idx + 1 == current.size()) {
      current[idx] = remaining;
      count_vectors.push_back(current);
      return;
    }
    for (std::uint64_t c = 0; c <= remaining; ++c) {
      current[idx] = c;
      self(self, idx + 1, remaining - c);
    }
  };
  enumerate(enumerate, 0, n);

  std::map<std::vector<std::uint64_t>, MultisetLaw> laws;
  for (const auto& cv : count_vectors) {
    std::map<std::uint64_t, std::uint64_t> input_counts;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (cv[i] > 0) input_counts[inputs[i]] = cv[i];
    }
    laws[cv] = shuffled_multiset_law(law, input_counts);
  }

  double worst = 0.0;
  for (const auto& cv : count_vectors) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (cv[i] == 0) continue;
      for (std::size_t j = 0; j < inputs.size(); ++j) {
        if (j == i) continue;
        auto neighbor = cv;
        --neighbor[i];
        ++neighbor[j];
        const MultisetLaw& P = laws.at(cv);
        const MultisetLaw& Q = laws.at(neighbor);
        worst = std::max(worst, multiset_law_hockey_stick(P, Q, epsilon));
      }
    }
  }
  return worst;
}

}  // namespace shuffledp
