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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "shuffledp/pmf.hpp"
#include "shuffledp/privacy.hpp"
#include "shuffledp/randomizer_law.hpp"
#include "shuffledp/zsum.hpp"

using namespace shuffledp;

namespace {

// Explicit conditional law of the counting randomizer: input x emits x + z
// copies of message 1 with z ~ Bernoulli(p).
FiniteRandomizerLaw counting_law(double p) {
  FiniteRandomizerLaw law;
  law.by_input[0] = {{MessageVector{{}}, 1.0 - p}, {MessageVector{{1}}, p}};
  law.by_input[1] = {{MessageVector{{1}}, 1.0 - p}, {MessageVector{{1, 1}}, p}};
  law.validate();
  return law;
}

}  // namespace

TEST_CASE("binomial_pmf matches closed-form masses") {
  const auto pmf = binomial_pmf(2, 0.5);
  CHECK(pmf.min_value() == 0);
  CHECK(pmf.max_value() == 2);
  CHECK(pmf.mass_at(0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(pmf.mass_at(1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(pmf.mass_at(2) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(pmf.mass_at(3) == 0.0);
  CHECK(pmf.log_mass_at(-1) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("binomial_pmf normalizes exactly even for large n") {
  for (const auto& [n, p] : std::vector<std::pair<std::uint64_t, double>>{
           {1000, 0.8502133863223005}, {3000, 0.6467788422301309}, {5000, 0.01}}) {
    const auto pmf = binomial_pmf(n, p);
    CHECK(std::abs(pmf.total_mass() - 1.0) <= 1e-12);
  }
}

TEST_CASE("degenerate binomials are point masses") {
  const auto zero = binomial_pmf(4, 0.0);
  CHECK(zero.mass_at(0) == 1.0);
  const auto one = binomial_pmf(4, 1.0);
  CHECK(one.mass_at(4) == 1.0);
}

TEST_CASE("Pmf validation rejects non-normalized or malformed mass") {
  CHECK_THROWS_AS(Pmf::from_mass(0, std::vector<double>{0.5, 0.4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Pmf::from_mass(0, std::vector<double>{1.2, -0.2}),
                  std::invalid_argument);
  const auto ok = Pmf::from_mass(-1, std::vector<double>{0.25, 0.75});
  CHECK(ok.mass_at(-1) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(ok.mass_at(0) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("shifted moves the support without touching the mass") {
  const auto pmf = binomial_pmf(3, 0.25).shifted(5);
  CHECK(pmf.min_value() == 5);
  CHECK(pmf.max_value() == 8);
  CHECK(pmf.mass_at(5) == doctest::Approx(std::pow(0.75, 3)).epsilon(1e-13));
}

TEST_CASE("convolving n Bernoulli laws reproduces the binomial exactly") {
  const double p = 0.3;
  const auto bern = Pmf::from_mass(0, std::vector<double>{1.0 - p, p});
  Pmf acc = Pmf::point_mass(0);
  for (int i = 0; i < 12; ++i) acc = convolve(acc, bern);
  const auto direct = binomial_pmf(12, p);
  REQUIRE(acc.min_value() == direct.min_value());
  REQUIRE(acc.max_value() == direct.max_value());
  for (std::int64_t v = 0; v <= 12; ++v) {
    CHECK(std::abs(acc.mass_at(v) - direct.mass_at(v)) <= 1e-12);
  }
}

TEST_CASE("hockey_stick reproduces hand-computed shifted-binomial values") {
  const auto P = binomial_pmf(2, 0.5);
  const auto Q = P.shifted(1);
  CHECK(hockey_stick(P, Q, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(hockey_stick(Q, P, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(hockey_stick(P, Q, std::log(2.0)) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(hockey_stick_max(P, Q, std::log(2.0)) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("hockey_stick is nonincreasing in epsilon") {
  const auto P = binomial_pmf(50, 0.6);
  const auto Q = P.shifted(1);
  double prev = std::numeric_limits<double>::infinity();
  for (double eps = 0.0; eps <= 2.0; eps += 0.1) {
    const double cur = hockey_stick_max(P, Q, eps);
    CHECK(cur <= prev + 1e-15);
    prev = cur;
  }
}

TEST_CASE("default and long-double hockey_stick accumulations agree") {
  const auto P = binomial_pmf(1000, 0.8502133863223005);
  const auto Q = P.shifted(1);
  for (double eps : {0.0, 0.5, 1.0}) {
    const double fast = hockey_stick(P, Q, eps);
    const double precise = hockey_stick_precise(P, Q, eps);
    CHECK(std::abs(fast - precise) < 1e-9);
  }
}

TEST_CASE("zsum_privacy_delta matches the frozen exact divergence") {
  const auto report = zsum_privacy_delta({1.0, 0.1, 1000}, 1.0);
  CHECK(report.epsilon_target == 1.0);
  CHECK(report.delta_target == 0.1);
  CHECK(report.delta_achieved ==
        doctest::Approx(1.5271405807184257e-20).epsilon(1e-9));
  CHECK(report.pass());

  const auto tighter = zsum_privacy_delta({0.5, 0.01, 3000}, 0.5);
  CHECK(tighter.pass());
}

TEST_CASE("out-of-contract parameters are exposed as failing divergences") {
  // n below the validity threshold: p collapses and the divergence is large.
  const double p = 1.0 - 50.0 / 266.0 * std::log(2.0 / 0.01);
  CHECK(p == doctest::Approx(0.0040756829796923538).epsilon(1e-12));
  const double delta = zsum_privacy_delta_value(266, p, 1.0);
  CHECK(delta == doctest::Approx(0.3374469445309043).epsilon(1e-9));
  CHECK(delta > 0.01);
}

TEST_CASE("divergence at epsilon 0 is the total variation distance") {
  const double p = 0.8502133863223005;
  const double tv = zsum_privacy_delta_value(1000, p, 0.0);
  CHECK(tv == doctest::Approx(0.035322085507485394).epsilon(1e-9));
}

TEST_CASE("smoothness_min_delta reproduces hand-computed binomial values") {
  const auto D = binomial_pmf(4, 0.5);
  CHECK(smoothness_min_delta(D, std::log(3.0), 1) ==
        doctest::Approx(5.0 / 16.0).epsilon(1e-14));
  CHECK(smoothness_min_delta(D, std::log(5.0), 1) ==
        doctest::Approx(1.0 / 16.0).epsilon(1e-14));
  // Wider shift radius can only grow the worst bad mass.
  CHECK(smoothness_min_delta(D, std::log(3.0), 2) >=
        smoothness_min_delta(D, std::log(3.0), 1));
}

TEST_CASE("binomial_smoothness_bound matches the frozen certificate") {
  const double gamma = 0.14978661367769952;
  const double alpha = 0.46211715726000974;
  const auto bound = binomial_smoothness_bound(1000, gamma, alpha);
  CHECK(bound.epsilon == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bound.delta == doctest::Approx(0.046100466034622145).epsilon(1e-9));
  CHECK(bound.k_limit == doctest::Approx(34.6094820541709).epsilon(1e-9));
  CHECK(bound.covers(1));
  CHECK(bound.covers(34));
  CHECK_FALSE(bound.covers(35));
  CHECK_FALSE(bound.covers(0));
}

TEST_CASE("binomial_smoothness_bound clamps delta at 1 and checks domains") {
  const auto weak = binomial_smoothness_bound(10, 0.5, 0.01);
  CHECK(weak.delta == 1.0);
  CHECK_THROWS_AS(binomial_smoothness_bound(10, 0.6, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(binomial_smoothness_bound(10, 0.3, 1.5), std::invalid_argument);
}

TEST_CASE("mneg_privacy_check matches frozen values and orders the chain") {
  const auto report = mneg_privacy_check({1.0, 0.1, 1000});
  CHECK(report.gamma == doctest::Approx(0.14978661367769952).epsilon(1e-12));
  CHECK(report.alpha == doctest::Approx(0.46211715726000974).epsilon(1e-12));
  CHECK(report.gamma_in_range);
  CHECK(report.smooth_exact == doctest::Approx(5.92632361150564e-19).epsilon(1e-9));
  CHECK(report.exact_delta == doctest::Approx(1.5271405807184257e-20).epsilon(1e-9));
  CHECK(report.bound.delta == doctest::Approx(0.046100466034622145).epsilon(1e-9));
  CHECK(report.exact_delta <= report.smooth_exact);
  CHECK(report.smooth_exact <= report.bound.delta);
  CHECK(report.chain_ok);
  CHECK(report.pass);

  const auto edge = mneg_privacy_check({1.0, 0.1, 300});
  CHECK(edge.gamma == doctest::Approx(0.4992887122589984).epsilon(1e-12));
  CHECK(edge.gamma_in_range);
  CHECK(edge.exact_delta == doctest::Approx(3.925952839144044e-18).epsilon(1e-9));
  CHECK(edge.chain_ok);
  CHECK(edge.pass);
}

TEST_CASE("shuffled_multiset_law folds users into a normalized transcript law") {
  const auto law = counting_law(0.75);
  const auto transcript = shuffled_multiset_law(law, {{0, 1}, {1, 1}});
  // Totals 0+z0+1+z1 in {1, 2, 3} with z ~ Bernoulli(0.75)^2.
  double total = 0.0;
  for (const auto& [key, prob] : transcript) {
    (void)key;
    total += prob;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(transcript.size() == 3);
  const MultisetKey one{{1, 1}};
  const MultisetKey two{{1, 2}};
  const MultisetKey three{{1, 3}};
  CHECK(transcript.at(one) == doctest::Approx(0.0625).epsilon(1e-12));
  CHECK(transcript.at(two) == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(transcript.at(three) == doctest::Approx(0.5625).epsilon(1e-12));
}

TEST_CASE("FiniteRandomizerLaw validation catches bad conditional laws") {
  FiniteRandomizerLaw law;
  law.by_input[0] = {{MessageVector{{}}, 0.5}, {MessageVector{{1}}, 0.4}};
  CHECK_THROWS_AS(law.validate(), std::invalid_argument);
  law.by_input[0] = {{MessageVector{{}}, 1.2}, {MessageVector{{1}}, -0.2}};
  CHECK_THROWS_AS(law.validate(), std::invalid_argument);
}

TEST_CASE("multiset_law_hockey_stick on hand-built laws") {
  MultisetLaw P;
  MultisetLaw Q;
  const MultisetKey a{{1, 1}};
  const MultisetKey b{{2, 1}};
  P[a] = 0.75;
  P[b] = 0.25;
  Q[a] = 0.25;
  Q[b] = 0.75;
  CHECK(multiset_law_hockey_stick(P, Q, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  const double eps = std::log(2.0);
  CHECK(multiset_law_hockey_stick(P, Q, eps) ==
        doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("brute-force shuffled divergence equals the analytic count form") {
  for (const auto& [n, p, eps] :
       std::vector<std::tuple<std::uint64_t, double, double>>{{6, 0.85, 0.5},
                                                              {8, 0.7, 0.25}}) {
    const auto law = counting_law(p);
    const double brute = brute_force_shuffled_dp(law, n, eps);
    const double analytic = zsum_privacy_delta_value(n, p, eps);
    CHECK(std::abs(brute - analytic) <= 1e-12);
  }
}
