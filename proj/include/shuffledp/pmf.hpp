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

#ifndef SHUFFLEDP_PMF_HPP_
#define SHUFFLEDP_PMF_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace shuffledp {

// Probability mass function on a contiguous integer range.  Both a linear and
// a log representation are kept: logs so binomial tails far below 1e-300 stay
// representable, linear so masses given to from_mass are returned verbatim by
// mass_at.  The total mass must be 1 within 1e-12 (accumulated in long
// double).
class Pmf {
 public:
  Pmf(std::int64_t min_value, std::vector<double> log_mass);

  static Pmf point_mass(std::int64_t value);
  static Pmf from_mass(std::int64_t min_value, std::span<const double> mass);

  std::int64_t min_value() const { return min_value_; }
  std::int64_t max_value() const {
    return min_value_ + static_cast<std::int64_t>(log_mass_.size()) - 1;
  }
  std::size_t size() const { return log_mass_.size(); }

  // -infinity outside the stored range.
  double log_mass_at(std::int64_t value) const;
  // 0 outside the stored range; bit-identical to the from_mass input.
  double mass_at(std::int64_t value) const;

  Pmf shifted(std::int64_t offset) const;

  // Total mass as accumulated in long double; equals 1 within 1e-12.
  double total_mass() const;

 private:
  Pmf(std::int64_t min_value, std::vector<double> log_mass,
      std::vector<double> mass);

  std::int64_t min_value_;
  std::vector<double> log_mass_;
  std::vector<double> mass_;
};

// Exact Binomial(n, p) law.  Coefficients are exact while C(n, k) fits in the
// double mantissa (n <= 50), so dyadic p yields dyadic masses; larger n uses
// log-gamma with renormalization.
Pmf binomial_pmf(std::uint64_t n, double p);

// Law of X + Y for independent X ~ a, Y ~ b.
Pmf convolve(const Pmf& a, const Pmf& b);

}  // namespace shuffledp

#endif  // SHUFFLEDP_PMF_HPP_
