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

#include "shuffledp/apps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace shuffledp {

namespace {

// Pr[Binomial(n, q) <= m], summed in long double from log-space terms.
double binomial_tail_le(std::uint64_t n, double q, std::uint64_t m) {
  if (q <= 0.0) return 1.0;
  if (q >= 1.0) return m >= n ? 1.0 : 0.0;
  if (m >= n) return 1.0;
  const double logq = std::log(q);
  const double log1q = std::log1p(-q);
  const double lgn = std::lgamma(static_cast<double>(n) + 1.0);
  long double acc = 0.0L;
  for (std::uint64_t k = 0; k <= m; ++k) {
    const double kk = static_cast<double>(k);
    const double lp = lgn - std::lgamma(kk + 1.0) -
                      std::lgamma(static_cast<double>(n - k) + 1.0) + kk * logq +
                      (static_cast<double>(n) - kk) * log1q;
    acc += std::exp(static_cast<long double>(lp));
  }
  return static_cast<double>(acc);
}

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint64_t exp,
                              std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (v > limit / base) throw std::invalid_argument("instance size limit exceeded");
    v *= base;
  }
  return v;
}

// Factorial-base digits of a permutation of {1..ell}: digit i counts the
// later entries smaller than perm[i]; digit i lies in [0, ell - i).
std::vector<std::uint32_t> lehmer_digits(std::span<const std::uint32_t> perm) {
  std::vector<std::uint32_t> remaining(perm.size());
  std::iota(remaining.begin(), remaining.end(), 1u);
  std::vector<std::uint32_t> digits(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    auto it = std::find(remaining.begin(), remaining.end(), perm[i]);
    digits[i] = static_cast<std::uint32_t>(it - remaining.begin());
    remaining.erase(it);
  }
  return digits;
}

std::vector<std::uint32_t> perm_from_lehmer(std::span<const std::uint32_t> digits) {
  std::vector<std::uint32_t> remaining(digits.size());
  std::iota(remaining.begin(), remaining.end(), 1u);
  std::vector<std::uint32_t> perm(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    perm[i] = remaining[digits[i]];
    remaining.erase(remaining.begin() + digits[i]);
  }
  return perm;
}

void check_permutation(std::span<const std::uint32_t> perm, std::uint32_t ell,
                       const char* label) {
  if (perm.size() != ell) throw std::invalid_argument(std::string(label) + ": wrong length");
  std::vector<bool> seen(ell + 1, false);
  for (auto v : perm) {
    if (v < 1 || v > ell || seen[v]) {
      throw std::invalid_argument(std::string(label) + ": not a permutation of {1..ell}");
    }
    seen[v] = true;
  }
}

}  // namespace

void validate_instance(const SupportInstance& inst) {
  if (inst.d == 0) throw std::invalid_argument("support instance: d must be >= 1");
  if (inst.support.empty()) throw std::invalid_argument("support instance: empty support");
  std::set<std::uint64_t> distinct;
  for (auto v : inst.support) {
    if (v < 1 || v > inst.d) throw std::invalid_argument("support instance: value outside {1..d}");
    if (!distinct.insert(v).second) {
      throw std::invalid_argument("support instance: duplicate value");
    }
  }
}

Dataset sample_instance(const SupportInstance& inst, std::uint64_t count, RngStream& rng) {
  validate_instance(inst);
  std::vector<std::uint64_t> rows(count);
  for (auto& row : rows) {
    row = inst.support[rng.uniform_int(inst.support.size())];
  }
  return Dataset::categorical(std::move(rows), inst.d);
}

void validate_instance(const PcInstance& inst) {
  if (inst.ell < 2) throw std::invalid_argument("pc instance: ell must be >= 2");
  check_permutation(inst.a, inst.ell, "pc instance a");
  check_permutation(inst.b, inst.ell, "pc instance b");
}

PcInstance random_pc_instance(std::uint32_t ell, RngStream& rng) {
  if (ell < 2) throw std::invalid_argument("random_pc_instance: ell must be >= 2");
  PcInstance inst;
  inst.ell = ell;
  for (auto* perm : {&inst.a, &inst.b}) {
    auto idx = rng.permutation(ell);
    perm->resize(ell);
    for (std::uint32_t i = 0; i < ell; ++i) (*perm)[i] = static_cast<std::uint32_t>(idx[i]) + 1;
  }
  return inst;
}

std::uint32_t chase_pointer(std::span<const std::uint32_t> a,
                            std::span<const std::uint32_t> b, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("chase_pointer: k must be >= 1");
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument("chase_pointer: permutation size mismatch");
  }
  std::uint32_t cur = a[0];
  for (std::uint32_t step = 2; step <= k; ++step) {
    const auto& side = (step % 2 == 1) ? a : b;
    cur = side[cur - 1];
  }
  return cur;
}

BigUint pc_code_space(std::uint32_t ell) {
  BigUint space = BigUint::factorial(ell);
  space.mul_add_small(2, 0);
  return space;
}

BigUint pc_encode(std::uint32_t tag, std::span<const std::uint32_t> perm) {
  if (tag != 1 && tag != 2) throw std::invalid_argument("pc_encode: tag must be 1 or 2");
  const std::uint32_t ell = static_cast<std::uint32_t>(perm.size());
  check_permutation(perm, ell, "pc_encode perm");
  const auto digits = lehmer_digits(perm);
  BigUint code(tag - 1);
  // The final digit has radix 1 and is always zero; skip it.
  for (std::uint32_t i = 0; i + 1 < ell; ++i) {
    code.mul_add_small(ell - i, digits[i]);
  }
  return code;
}

std::pair<std::uint32_t, std::vector<std::uint32_t>> pc_decode(const BigUint& code,
                                                               std::uint32_t ell) {
  if (ell < 2) throw std::invalid_argument("pc_decode: ell must be >= 2");
  if (code >= pc_code_space(ell)) throw std::invalid_argument("pc_decode: code out of range");
  BigUint v = code;
  std::vector<std::uint32_t> digits(ell, 0);
  for (std::uint32_t i = ell - 1; i-- > 0;) {
    digits[i] = v.divmod_small(ell - i);
  }
  const std::uint32_t tag = static_cast<std::uint32_t>(v.to_u64()) + 1;
  return {tag, perm_from_lehmer(digits)};
}

std::vector<BigUint> sample_instance(const PcInstance& inst, std::uint64_t count,
                                     RngStream& rng) {
  validate_instance(inst);
  const BigUint code_a = pc_encode(1, inst.a);
  const BigUint code_b = pc_encode(2, inst.b);
  std::vector<BigUint> samples(count);
  for (auto& s : samples) {
    s = rng.uniform_int(2) == 0 ? code_a : code_b;
  }
  return samples;
}

void validate_instance(const MpjInstance& inst) {
  if (inst.s < 2) throw std::invalid_argument("mpj instance: s must be >= 2");
  if (inst.h < 1) throw std::invalid_argument("mpj instance: h must be >= 1");
  if (inst.levels.size() != inst.h) throw std::invalid_argument("mpj instance: wrong level count");
  for (std::uint32_t i = 0; i < inst.h; ++i) {
    const std::uint64_t width = checked_pow_u64(inst.s, i, 1ull << 24);
    if (inst.levels[i].size() != width) {
      throw std::invalid_argument("mpj instance: level width must be s^i");
    }
    for (auto label : inst.levels[i]) {
      if (label >= inst.s) throw std::invalid_argument("mpj instance: label outside {0..s-1}");
    }
  }
}

MpjInstance random_mpj_instance(std::uint32_t s, std::uint32_t h, RngStream& rng) {
  if (s < 2 || h < 1) throw std::invalid_argument("random_mpj_instance: need s >= 2, h >= 1");
  MpjInstance inst;
  inst.s = s;
  inst.h = h;
  inst.levels.resize(h);
  for (std::uint32_t i = 0; i < h; ++i) {
    const std::uint64_t width = checked_pow_u64(s, i, 1ull << 24);
    inst.levels[i].resize(width);
    for (auto& label : inst.levels[i]) {
      label = static_cast<std::uint32_t>(rng.uniform_int(s));
    }
  }
  return inst;
}

std::vector<std::uint32_t> chase_path(const MpjInstance& inst) {
  validate_instance(inst);
  std::vector<std::uint32_t> path;
  path.reserve(inst.h);
  std::uint64_t pos = 0;
  for (std::uint32_t i = 0; i < inst.h; ++i) {
    const std::uint32_t label = inst.levels[i][pos];
    path.push_back(label);
    pos = pos * inst.s + label;
  }
  return path;
}

BigUint mpj_code_space(std::uint32_t s, std::uint32_t h) {
  if (s < 2 || h < 1) throw std::invalid_argument("mpj_code_space: need s >= 2, h >= 1");
  BigUint space;
  for (std::uint32_t i = 0; i < h; ++i) {
    const std::uint64_t width = checked_pow_u64(s, i, 1ull << 24);
    space += BigUint::pow(s, width);
  }
  return space;
}

BigUint mpj_encode(std::uint32_t level, std::span<const std::uint32_t> labels,
                   std::uint32_t s, std::uint32_t h) {
  if (level >= h) throw std::invalid_argument("mpj_encode: level out of range");
  const std::uint64_t width = checked_pow_u64(s, level, 1ull << 24);
  if (labels.size() != width) throw std::invalid_argument("mpj_encode: wrong label count");
  BigUint code;
  for (std::uint32_t i = 0; i < level; ++i) {
    code += BigUint::pow(s, checked_pow_u64(s, i, 1ull << 24));
  }
  BigUint digits;
  for (auto label : labels) {
    if (label >= s) throw std::invalid_argument("mpj_encode: label outside {0..s-1}");
    digits.mul_add_small(s, label);
  }
  code += digits;
  return code;
}

std::pair<std::uint32_t, std::vector<std::uint32_t>> mpj_decode(const BigUint& code,
                                                                std::uint32_t s,
                                                                std::uint32_t h) {
  if (code >= mpj_code_space(s, h)) throw std::invalid_argument("mpj_decode: code out of range");
  BigUint rem = code;
  std::uint32_t level = 0;
  for (; level < h; ++level) {
    const BigUint block = BigUint::pow(s, checked_pow_u64(s, level, 1ull << 24));
    if (rem < block) break;
    rem -= block;
  }
  const std::uint64_t width = checked_pow_u64(s, level, 1ull << 24);
  std::vector<std::uint32_t> labels(width);
  for (std::uint64_t i = width; i-- > 0;) {
    labels[i] = rem.divmod_small(s);
  }
  return {level, std::move(labels)};
}

std::vector<BigUint> sample_instance(const MpjInstance& inst, std::uint64_t count,
                                     RngStream& rng) {
  validate_instance(inst);
  std::vector<BigUint> level_codes(inst.h);
  for (std::uint32_t i = 0; i < inst.h; ++i) {
    level_codes[i] = mpj_encode(i, inst.levels[i], inst.s, inst.h);
  }
  std::vector<BigUint> samples(count);
  for (auto& s : samples) {
    s = level_codes[rng.uniform_int(inst.h)];
  }
  return samples;
}

std::uint64_t required_samples(std::uint64_t h, std::uint64_t t) {
  if (h == 0) throw std::invalid_argument("required_samples: h must be >= 1");
  const double q = 1.0 / static_cast<double>(h);
  const double target = 1.0 / (200.0 * static_cast<double>(h));
  auto ok = [&](std::uint64_t n) { return binomial_tail_le(n, q, 2 * t) <= target; };
  std::uint64_t lo = 2 * t + 1;
  if (ok(lo)) return lo;
  std::uint64_t hi = lo;
  while (!ok(hi)) {
    if (hi > (1ull << 40)) throw std::runtime_error("required_samples: no feasible n");
    hi *= 2;
  }
  // Invariant: !ok(lo) and ok(hi); binary search the boundary.
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::uint64_t default_threshold(const ProtocolParams& params, const BigUint& d) {
  require_valid(params);
  const std::uint64_t d_small =
      d > BigUint(params.n) ? params.n : d.to_u64();
  if (d_small == 0) throw std::invalid_argument("default_threshold: d must be >= 1");
  // Clamped so the alpha contract (beta >= delta^25) holds at large delta; in
  // a support run only the planted bins are nonzero, so a per-bin budget of
  // delta^25 < 1/(200h) still union-bounds below the 1/200 headroom.
  const double beta =
      std::max(1.0 / (400.0 * static_cast<double>(std::min(params.n, d_small))),
               std::pow(params.delta, 25.0));
  const double alpha = zsum_alpha(params, beta);
  return static_cast<std::uint64_t>(std::ceil(alpha * static_cast<double>(params.n)));
}

SupportRunPlan plan_support_run(std::uint64_t h, const BigUint& d, double epsilon,
                                double delta) {
  if (h == 0) throw std::invalid_argument("plan_support_run: h must be >= 1");
  const double delta_cap = std::pow(1.0 / (200.0 * static_cast<double>(h)), 1.0 / 25.0);
  if (!(delta < delta_cap)) {
    throw std::invalid_argument("plan_support_run: delta must be below (1/(200h))^(1/25)");
  }
  std::uint64_t n = static_cast<std::uint64_t>(std::ceil(min_required_n(epsilon, delta)));
  SupportRunPlan plan;
  for (int iter = 0; iter < 100; ++iter) {
    const ProtocolParams params{epsilon, delta, n};
    const std::uint64_t t = default_threshold(params, d);
    const std::uint64_t needed = std::max(
        n, std::max(required_samples(h, t),
                    static_cast<std::uint64_t>(std::ceil(min_required_n(epsilon, delta)))));
    if (needed == n) {
      plan.t = t;
      plan.n = n;
      const std::uint64_t d_small = d > BigUint(n) ? n : d.to_u64();
      plan.beta =
          std::max(1.0 / (400.0 * static_cast<double>(std::min(n, d_small))),
                   std::pow(delta, 25.0));
      return plan;
    }
    n = needed;
  }
  throw std::runtime_error("plan_support_run: no fixed point");
}

std::set<std::uint64_t> select_support(std::span<const double> estimates,
                                       std::uint64_t n, std::uint64_t t) {
  if (n == 0) throw std::invalid_argument("select_support: n must be >= 1");
  const double threshold = static_cast<double>(t + 1) / static_cast<double>(n);
  std::set<std::uint64_t> out;
  for (std::size_t j = 0; j < estimates.size(); ++j) {
    if (estimates[j] >= threshold) out.insert(j + 1);
  }
  return out;
}

std::set<BigUint> solve_support_codes(std::span<const BigUint> samples,
                                      const ProtocolParams& params, std::uint64_t t,
                                      RngStream& rng) {
  if (samples.size() != params.n) {
    throw std::invalid_argument("solve_support_codes: sample count differs from params n");
  }
  const ZsumParams zp = make_zsum_params(params);
  std::map<BigUint, std::uint64_t> counts;
  for (const auto& code : samples) ++counts[code];
  const BinomialSampler noise(params.n, zp.p);
  const double threshold = static_cast<double>(t + 1) / static_cast<double>(params.n);
  std::set<BigUint> selected;
  std::uint64_t rank = 0;
  for (const auto& [code, count] : counts) {
    RngStream bin_rng = rng.child(rank++);
    const std::uint64_t total = count + noise.sample(bin_rng);
    if (zsum_analyze(total, zp) >= threshold) selected.insert(code);
  }
  return selected;
}

std::set<std::uint64_t> solve_support(const Dataset& data, const ProtocolParams& params,
                                      std::uint64_t t, RngStream& rng) {
  if (data.universe != Universe::kCategorical) {
    throw std::invalid_argument("solve_support: dataset must be categorical");
  }
  std::vector<BigUint> codes(data.n());
  for (std::size_t i = 0; i < data.rows.size(); ++i) codes[i] = BigUint(data.rows[i]);
  auto selected = solve_support_codes(codes, params, t, rng);
  std::set<std::uint64_t> out;
  for (const auto& code : selected) out.insert(code.to_u64());
  return out;
}

std::optional<std::uint32_t> solve_pc(std::span<const BigUint> samples,
                                      const ProtocolParams& params, std::uint32_t k,
                                      std::uint32_t ell, std::uint64_t t, RngStream& rng) {
  const double delta_cap = std::pow(1.0 / 400.0, 1.0 / 25.0);
  if (!(params.delta < delta_cap)) {
    throw std::invalid_argument("solve_pc: delta must be below (1/400)^(1/25)");
  }
  auto selected = solve_support_codes(samples, params, t, rng);
  if (selected.size() != 2) return std::nullopt;
  std::vector<std::uint32_t> a, b;
  for (const auto& code : selected) {
    auto [tag, perm] = pc_decode(code, ell);
    if (tag == 1 && a.empty()) {
      a = std::move(perm);
    } else if (tag == 2 && b.empty()) {
      b = std::move(perm);
    } else {
      return std::nullopt;  // duplicated tag
    }
  }
  if (a.empty() || b.empty()) return std::nullopt;
  return chase_pointer(a, b, k);
}

std::optional<std::vector<std::uint32_t>> solve_mpj(std::span<const BigUint> samples,
                                                    const ProtocolParams& params,
                                                    std::uint32_t s, std::uint32_t h,
                                                    std::uint64_t t, RngStream& rng) {
  const double delta_cap = std::pow(1.0 / (200.0 * static_cast<double>(h)), 1.0 / 25.0);
  if (!(params.delta < delta_cap)) {
    throw std::invalid_argument("solve_mpj: delta must be below (1/(200h))^(1/25)");
  }
  auto selected = solve_support_codes(samples, params, t, rng);
  if (selected.size() != h) return std::nullopt;
  MpjInstance inst;
  inst.s = s;
  inst.h = h;
  inst.levels.resize(h);
  std::vector<bool> seen(h, false);
  for (const auto& code : selected) {
    auto [level, labels] = mpj_decode(code, s, h);
    if (seen[level]) return std::nullopt;
    seen[level] = true;
    inst.levels[level] = std::move(labels);
  }
  for (bool ok : seen) {
    if (!ok) return std::nullopt;
  }
  return chase_path(inst);
}

}  // namespace shuffledp
