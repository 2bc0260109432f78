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

#include "shuffledp/hist.hpp"

#include <cmath>
#include <stdexcept>

namespace shuffledp {

HistParams make_hist_params(std::uint64_t d, const ProtocolParams& params) {
  if (d == 0) throw std::invalid_argument("make_hist_params: d must be >= 1");
  return HistParams{d, make_zsum_params(params)};
}

MessageVector hist_randomize(std::uint64_t x, const HistParams& hp, RngStream& rng) {
  if (x < 1 || x > hp.d) throw std::invalid_argument("hist_randomize: value outside {1..d}");
  MessageVector mv;
  for (std::uint64_t j = 1; j <= hp.d; ++j) {
    const std::uint64_t b = (x == j) ? 1 : 0;
    const std::uint64_t z = rng.bernoulli(hp.zsum.p) ? 1 : 0;
    for (std::uint64_t c = 0; c < b + z; ++c) mv.messages.push_back(j);
  }
  return mv;
}

Randomizer hist_randomizer(const HistParams& hp) {
  return [hp](std::uint64_t x, RngStream& rng) { return hist_randomize(x, hp, rng); };
}

HistogramEstimate hist_analyze(const MessageMultiset& ms, const HistParams& hp) {
  HistogramEstimate est;
  est.estimates.assign(hp.d, 0.0);
  for (const auto& [value, count] : ms.counts) {
    if (value < 1 || value > hp.d) {
      throw std::invalid_argument("hist_analyze: message outside {1..d}");
    }
    est.estimates[value - 1] = zsum_analyze(count, hp.zsum);
  }
  return est;
}

HistogramEstimate aggregate_simulate(std::span<const std::uint64_t> true_counts,
                                     const HistParams& hp, RngStream& rng) {
  if (true_counts.size() != hp.d) {
    throw std::invalid_argument("aggregate_simulate: counts length differs from d");
  }
  std::uint64_t sum = 0;
  for (auto c : true_counts) sum += c;
  if (sum != hp.zsum.base.n) {
    throw std::invalid_argument("aggregate_simulate: counts do not sum to n");
  }
  const BinomialSampler noise(hp.zsum.base.n, hp.zsum.p);
  HistogramEstimate est;
  est.estimates.assign(hp.d, 0.0);
  std::uint64_t rank = 0;
  for (std::uint64_t j = 0; j < hp.d; ++j) {
    if (true_counts[j] == 0) continue;  // noise alone cannot push past n
    RngStream bin_rng = rng.child(rank++);
    const std::uint64_t total = true_counts[j] + noise.sample(bin_rng);
    est.estimates[j] = zsum_analyze(total, hp.zsum);
  }
  return est;
}

TrueHistogram true_histogram(const Dataset& data) {
  if (data.universe != Universe::kCategorical) {
    throw std::invalid_argument("true_histogram: dataset must be categorical");
  }
  TrueHistogram truth;
  truth.frequencies.assign(data.d, 0.0);
  const double n = static_cast<double>(data.n());
  for (auto v : data.rows) truth.frequencies[v - 1] += 1.0 / n;
  return truth;
}

double per_query_error(const HistogramEstimate& est, const TrueHistogram& truth,
                       std::uint64_t j) {
  if (j < 1 || j > est.estimates.size() || est.estimates.size() != truth.frequencies.size()) {
    throw std::invalid_argument("per_query_error: bin index out of range");
  }
  return std::fabs(est.estimates[j - 1] - truth.frequencies[j - 1]);
}

double simultaneous_error(const HistogramEstimate& est, const TrueHistogram& truth) {
  if (est.estimates.size() != truth.frequencies.size()) {
    throw std::invalid_argument("simultaneous_error: size mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < est.estimates.size(); ++i) {
    worst = std::max(worst, std::fabs(est.estimates[i] - truth.frequencies[i]));
  }
  return worst;
}

double hist_simultaneous_alpha(const ProtocolParams& params, double beta) {
  require_valid(params);
  const double n = static_cast<double>(params.n);
  if (beta < n * std::pow(params.delta, 25.0)) {
    throw std::invalid_argument("hist_simultaneous_alpha: beta below n * delta^25");
  }
  return zsum_alpha(params, beta / n);
}

HistogramEstimate run_hist_protocol(const Dataset& data, const HistParams& hp,
                                    RngStream& rng, ShuffleMode mode) {
  if (data.universe != Universe::kCategorical || data.d != hp.d) {
    throw std::invalid_argument("run_hist_protocol: dataset universe mismatch");
  }
  if (data.n() != hp.zsum.base.n) {
    throw std::invalid_argument("run_hist_protocol: dataset size differs from params n");
  }
  return execute_shuffled(
      hist_randomizer(hp),
      [&hp](const MessageMultiset& ms) { return hist_analyze(ms, hp); }, data, rng,
      mode);
}

Message local_rr_randomize(std::uint64_t x, double epsilon, std::uint64_t d,
                           RngStream& rng) {
  if (x < 1 || x > d) throw std::invalid_argument("local_rr_randomize: value outside {1..d}");
  if (!(epsilon > 0.0)) throw std::invalid_argument("local_rr_randomize: epsilon <= 0");
  if (d == 1) return x;
  const double keep = std::exp(epsilon) / (std::exp(epsilon) + static_cast<double>(d) - 1.0);
  if (rng.bernoulli(keep)) return x;
  // Uniform over the d - 1 other values.
  std::uint64_t r = rng.uniform_int(d - 1) + 1;
  if (r >= x) ++r;
  return r;
}

HistogramEstimate local_rr_analyze(std::span<const Message> reports, double epsilon,
                                   std::uint64_t d) {
  if (reports.empty()) throw std::invalid_argument("local_rr_analyze: no reports");
  if (d == 1) {
    HistogramEstimate trivial;
    trivial.estimates.assign(1, 1.0);
    return trivial;
  }
  const double n = static_cast<double>(reports.size());
  const double denom = std::exp(epsilon) + static_cast<double>(d) - 1.0;
  const double pi = std::exp(epsilon) / denom;
  const double q = 1.0 / denom;
  std::vector<double> counts(d, 0.0);
  for (Message m : reports) {
    if (m < 1 || m > d) throw std::invalid_argument("local_rr_analyze: report outside {1..d}");
    counts[m - 1] += 1.0;
  }
  HistogramEstimate est;
  est.estimates.assign(d, 0.0);
  for (std::uint64_t j = 0; j < d; ++j) {
    est.estimates[j] = (counts[j] / n - q) / (pi - q);
  }
  return est;
}

HistogramEstimate run_local_rr(const Dataset& data, double epsilon, RngStream& rng) {
  if (data.universe != Universe::kCategorical) {
    throw std::invalid_argument("run_local_rr: dataset must be categorical");
  }
  std::vector<Message> reports(data.n());
  for (std::uint64_t i = 0; i < data.n(); ++i) {
    RngStream user_rng = rng.child(i);
    reports[i] = local_rr_randomize(data.rows[i], epsilon, data.d, user_rng);
  }
  return local_rr_analyze(reports, epsilon, data.d);
}

}  // namespace shuffledp
