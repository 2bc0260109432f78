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

#include "shuffledp/pmf.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace shuffledp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kMassTolerance = 1e-12;

long double sum_of_logs(const std::vector<double>& log_mass) {
  long double acc = 0.0L;
  for (double lm : log_mass) {
    if (std::isnan(lm) || lm > 1e-9) {
      throw std::invalid_argument("Pmf: log mass must be <= 0 and not NaN");
    }
    acc += std::exp(static_cast<long double>(lm));
  }
  return acc;
}

}  // namespace

Pmf::Pmf(std::int64_t min_value, std::vector<double> log_mass,
         std::vector<double> mass)
    : min_value_(min_value), log_mass_(std::move(log_mass)), mass_(std::move(mass)) {
  if (log_mass_.empty()) throw std::invalid_argument("Pmf: empty support");
  const long double total = sum_of_logs(log_mass_);
  if (std::fabs(static_cast<double>(total) - 1.0) > kMassTolerance) {
    throw std::invalid_argument("Pmf: masses do not sum to 1");
  }
}

Pmf::Pmf(std::int64_t min_value, std::vector<double> log_mass)
    : Pmf(min_value, std::move(log_mass), {}) {
  mass_.resize(log_mass_.size());
  for (std::size_t i = 0; i < log_mass_.size(); ++i) {
    mass_[i] = log_mass_[i] == kNegInf ? 0.0 : std::exp(log_mass_[i]);
  }
}

Pmf Pmf::point_mass(std::int64_t value) { return Pmf(value, {0.0}); }

Pmf Pmf::from_mass(std::int64_t min_value, std::span<const double> mass) {
  std::vector<double> log_mass(mass.size());
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (mass[i] < 0.0) throw std::invalid_argument("Pmf: negative mass");
    log_mass[i] = mass[i] == 0.0 ? kNegInf : std::log(mass[i]);
  }
  return Pmf(min_value, std::move(log_mass),
             std::vector<double>(mass.begin(), mass.end()));
}

double Pmf::log_mass_at(std::int64_t value) const {
  if (value < min_value_ || value > max_value()) return kNegInf;
  return log_mass_[static_cast<std::size_t>(value - min_value_)];
}

double Pmf::mass_at(std::int64_t value) const {
  if (value < min_value_ || value > max_value()) return 0.0;
  return mass_[static_cast<std::size_t>(value - min_value_)];
}

Pmf Pmf::shifted(std::int64_t offset) const {
  Pmf out = *this;
  out.min_value_ += offset;
  return out;
}

double Pmf::total_mass() const { return static_cast<double>(sum_of_logs(log_mass_)); }

Pmf binomial_pmf(std::uint64_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial_pmf: p outside [0,1]");
  if (p == 0.0) return Pmf::point_mass(0);
  if (p == 1.0) return Pmf::point_mass(static_cast<std::int64_t>(n));
  if (n <= 50) {
    // C(n, k) and every recurrence intermediate fit in the mantissa, so the
    // coefficients are exact and dyadic p yields exactly dyadic masses.
    std::vector<double> mass(n + 1);
    double coeff = 1.0;
    for (std::uint64_t k = 0; k <= n; ++k) {
      mass[k] = coeff * std::pow(p, static_cast<double>(k)) *
                std::pow(1.0 - p, static_cast<double>(n - k));
      coeff = coeff * static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
    return Pmf::from_mass(0, mass);
  }
  const double logp = std::log(p);
  const double log1p = std::log1p(-p);
  const double lgn = std::lgamma(static_cast<double>(n) + 1.0);
  std::vector<double> log_mass(n + 1);
  double max_term = kNegInf;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    log_mass[k] = lgn - std::lgamma(kk + 1.0) -
                  std::lgamma(static_cast<double>(n - k) + 1.0) + kk * logp +
                  (static_cast<double>(n) - kk) * log1p;
    max_term = std::max(max_term, log_mass[k]);
  }
  // Remove the systematic log-gamma drift: the true law sums to exactly 1,
  // so renormalizing only sharpens every entry.
  long double z = 0.0L;
  for (double lm : log_mass) z += std::exp(static_cast<long double>(lm - max_term));
  const double log_z = max_term + static_cast<double>(std::log(z));
  for (double& lm : log_mass) lm -= log_z;
  return Pmf(0, std::move(log_mass));
}

Pmf convolve(const Pmf& a, const Pmf& b) {
  const std::size_t out_size = a.size() + b.size() - 1;
  std::vector<double> log_mass(out_size, kNegInf);
  for (std::size_t i = 0; i < out_size; ++i) {
    // log-sum-exp over pairs (j, i - j); keeps deep tails accurate.
    double max_term = kNegInf;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i < j || i - j >= b.size()) continue;
      const double term = a.log_mass_at(a.min_value() + static_cast<std::int64_t>(j)) +
                          b.log_mass_at(b.min_value() + static_cast<std::int64_t>(i - j));
      if (term > max_term) max_term = term;
    }
    if (max_term == kNegInf) continue;
    long double acc = 0.0L;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i < j || i - j >= b.size()) continue;
      const double term = a.log_mass_at(a.min_value() + static_cast<std::int64_t>(j)) +
                          b.log_mass_at(b.min_value() + static_cast<std::int64_t>(i - j));
      acc += std::exp(static_cast<long double>(term - max_term));
    }
    log_mass[i] = max_term + static_cast<double>(std::log(acc));
  }
  return Pmf(a.min_value() + b.min_value(), std::move(log_mass));
}

}  // namespace shuffledp
