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

#include "shuffledp/core.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace shuffledp {

double min_required_n(double epsilon, double delta) {
  return 100.0 / (epsilon * epsilon) * std::log(2.0 / delta);
}

std::vector<std::string> validate_params(const ProtocolParams& params) {
  std::vector<std::string> violations;
  if (!(params.epsilon > 0.0 && params.epsilon <= 1.0)) {
    violations.push_back("epsilon must lie in (0, 1]");
  }
  if (!(params.delta > 0.0 && params.delta <= 1.0)) {
    violations.push_back("delta must lie in (0, 1]");
  }
  if (violations.empty()) {
    const double bound = min_required_n(params.epsilon, params.delta);
    if (static_cast<double>(params.n) < bound) {
      std::ostringstream os;
      os << "n must be at least (100/epsilon^2)*ln(2/delta) = " << bound;
      violations.push_back(os.str());
    }
  } else if (params.n == 0) {
    violations.push_back("n must be positive");
  }
  return violations;
}

void require_valid(const ProtocolParams& params) {
  auto violations = validate_params(params);
  if (violations.empty()) return;
  std::ostringstream os;
  os << "invalid protocol params:";
  for (const auto& v : violations) os << " [" << v << "]";
  throw std::invalid_argument(os.str());
}

void MessageMultiset::add(Message value, std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  counts[value] += multiplicity;
  total += multiplicity;
}

std::uint64_t MessageMultiset::count(Message value) const {
  auto it = counts.find(value);
  return it == counts.end() ? 0 : it->second;
}

MessageMultiset MessageMultiset::from_messages(std::span<const Message> messages) {
  MessageMultiset ms;
  for (Message m : messages) ms.add(m);
  return ms;
}

Dataset Dataset::binary(std::vector<std::uint64_t> rows) {
  for (auto v : rows) {
    if (v > 1) throw std::invalid_argument("binary dataset rows must be 0 or 1");
  }
  Dataset data;
  data.rows = std::move(rows);
  data.d = 2;
  data.universe = Universe::kBinary;
  return data;
}

Dataset Dataset::categorical(std::vector<std::uint64_t> rows, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("categorical dataset needs d >= 1");
  for (auto v : rows) {
    if (v < 1 || v > d) {
      throw std::invalid_argument("categorical dataset rows must lie in {1..d}");
    }
  }
  Dataset data;
  data.rows = std::move(rows);
  data.d = d;
  data.universe = Universe::kCategorical;
  return data;
}

MessageMultiset shuffle(std::span<const MessageVector> per_user) {
  MessageMultiset ms;
  for (const auto& mv : per_user) {
    for (Message m : mv.messages) ms.add(m);
  }
  return ms;
}

std::vector<Message> shuffle_to_vector(std::span<const MessageVector> per_user,
                                       RngStream& rng) {
  std::vector<Message> flat;
  for (const auto& mv : per_user) {
    flat.insert(flat.end(), mv.messages.begin(), mv.messages.end());
  }
  auto perm = rng.permutation(flat.size());
  std::vector<Message> out(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) out[i] = flat[perm[i]];
  return out;
}

namespace detail {

std::vector<MessageVector> run_randomizers(const Randomizer& randomizer,
                                           const Dataset& data, RngStream& rng) {
  std::vector<MessageVector> per_user;
  per_user.reserve(data.n());
  for (std::uint64_t i = 0; i < data.n(); ++i) {
    RngStream user_rng = rng.child(i);
    per_user.push_back(randomizer(data.rows[i], user_rng));
  }
  return per_user;
}

}  // namespace detail

}  // namespace shuffledp
