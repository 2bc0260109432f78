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
#include <stdexcept>
#include <vector>

#include "shuffledp/core.hpp"
#include "shuffledp/zsum.hpp"

using namespace shuffledp;

TEST_CASE("compute_p matches frozen values inside the validity region") {
  CHECK(compute_p({1.0, 0.1, 1000}) == 0.8502133863223005);
  CHECK(compute_p({0.5, 0.01, 3000}) == 0.6467788422301309);
  const double p = compute_p({1.0, 0.1, 300});
  CHECK(p > 0.5);
  CHECK(p < 1.0);
  CHECK_THROWS_AS(compute_p({1.0, 0.1, 299}), std::invalid_argument);
  CHECK_THROWS_AS(compute_p({1.2, 0.1, 100000}), std::invalid_argument);
}

TEST_CASE("make_zsum_params carries the base params and p") {
  const ProtocolParams params{1.0, 0.1, 1000};
  const auto zp = make_zsum_params(params);
  CHECK(zp.base.n == 1000);
  CHECK(zp.p == compute_p(params));
}

TEST_CASE("zsum_message emits x + z copies of message 1") {
  CHECK(zsum_message(0, 0).messages.empty());
  CHECK(zsum_message(1, 0).messages == std::vector<Message>{1});
  CHECK(zsum_message(0, 1).messages == std::vector<Message>{1});
  CHECK(zsum_message(1, 1).messages == std::vector<Message>{1, 1});
  CHECK_THROWS_AS(zsum_message(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(zsum_message(0, 2), std::invalid_argument);
}

TEST_CASE("zsum_randomize only produces the legal message shapes") {
  const auto zp = make_zsum_params({1.0, 0.1, 1000});
  RngStream rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto m0 = zsum_randomize(0, zp, rng);
    CHECK(m0.messages.size() <= 1);
    const auto m1 = zsum_randomize(1, zp, rng);
    CHECK(m1.messages.size() >= 1);
    CHECK(m1.messages.size() <= 2);
    for (auto v : m1.messages) CHECK(v == 1);
  }
}

TEST_CASE("zsum_analyze truncates at the noise-only ceiling") {
  const auto zp = make_zsum_params({1.0, 0.1, 1000});
  CHECK(zsum_analyze(std::uint64_t{0}, zp) == 0.0);
  CHECK(zsum_analyze(std::uint64_t{500}, zp) == 0.0);
  // A count of exactly n still reads as pure noise.
  CHECK(zsum_analyze(std::uint64_t{1000}, zp) == 0.0);
  CHECK(zsum_analyze(std::uint64_t{1100}, zp) ==
        doctest::Approx(0.2497866136776995).epsilon(1e-15));
  CHECK(zsum_analyze(std::uint64_t{2000}, zp) ==
        doctest::Approx(2.0 - zp.p).epsilon(1e-15));
  CHECK_THROWS_AS(zsum_analyze(std::uint64_t{2001}, zp), std::invalid_argument);
}

TEST_CASE("the multiset analyzer only accepts the protocol alphabet") {
  const auto zp = make_zsum_params({1.0, 0.1, 1000});
  MessageMultiset ms;
  ms.add(1, 1100);
  CHECK(zsum_analyze(ms, zp) == zsum_analyze(std::uint64_t{1100}, zp));
  ms.add(2);
  CHECK_THROWS_AS(zsum_analyze(ms, zp), std::invalid_argument);
}

TEST_CASE("zsum_alpha matches the frozen bound and its decomposition") {
  const ProtocolParams params{1.0, 0.1, 1000};
  const double alpha = zsum_alpha(params, 0.05);
  CHECK(alpha == doctest::Approx(0.19679915505537737).epsilon(1e-15));

  const double bias = 50.0 / 1000.0 * std::log(20.0);
  const double noise =
      std::sqrt(200.0 * std::log(20.0) * std::log(2.0 / 0.05)) / 1000.0;
  CHECK(bias == doctest::Approx(0.1497866136776995).epsilon(1e-14));
  CHECK(noise == doctest::Approx(0.04701254137767782).epsilon(1e-14));
  CHECK(alpha == doctest::Approx(bias + noise).epsilon(1e-15));

  // Tenfold n shrinks the bound tenfold: both terms scale as 1/n.
  CHECK(zsum_alpha({1.0, 0.1, 10000}, 0.05) ==
        doctest::Approx(0.019679915505537737).epsilon(1e-15));
}

TEST_CASE("zsum_alpha rejects beta outside its contract") {
  const ProtocolParams params{1.0, 0.1, 1000};
  CHECK_THROWS_AS(zsum_alpha(params, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(zsum_alpha(params, 1.5), std::invalid_argument);
  // delta^25 = 1e-25 is the floor.
  CHECK_THROWS_AS(zsum_alpha(params, 1e-26), std::invalid_argument);
  CHECK_NOTHROW(zsum_alpha(params, 1e-24));
}

TEST_CASE("run_zsum_protocol outputs exactly 0 on the all-zeros input") {
  const ProtocolParams params{1.0, 0.1, 400};
  const auto zp = make_zsum_params(params);
  const auto zeros = Dataset::binary(std::vector<std::uint64_t>(400, 0));
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    RngStream a(seed);
    RngStream b(seed);
    CHECK(run_zsum_protocol(zeros, zp, a, ShuffleMode::kCounts) == 0.0);
    CHECK(run_zsum_protocol(zeros, zp, b, ShuffleMode::kExplicitPermutation) == 0.0);
  }
}

TEST_CASE("run_zsum_protocol is deterministic and mode-independent per seed") {
  const ProtocolParams params{1.0, 0.1, 400};
  const auto zp = make_zsum_params(params);
  std::vector<std::uint64_t> rows(400, 1);
  const auto ones = Dataset::binary(rows);
  RngStream r1(7);
  RngStream r2(7);
  RngStream r3(7);
  const double a = run_zsum_protocol(ones, zp, r1, ShuffleMode::kCounts);
  const double b = run_zsum_protocol(ones, zp, r2, ShuffleMode::kCounts);
  const double c = run_zsum_protocol(ones, zp, r3, ShuffleMode::kExplicitPermutation);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a >= 0.0);
  CHECK(a <= 2.0 - zp.p);
}

TEST_CASE("run_zsum_protocol validates the dataset") {
  const auto zp = make_zsum_params({1.0, 0.1, 400});
  RngStream rng(1);
  const auto wrong_n = Dataset::binary(std::vector<std::uint64_t>(399, 0));
  CHECK_THROWS_AS(run_zsum_protocol(wrong_n, zp, rng), std::invalid_argument);
  const auto cat = Dataset::categorical(std::vector<std::uint64_t>(400, 1), 3);
  CHECK_THROWS_AS(run_zsum_protocol(cat, zp, rng), std::invalid_argument);
}
