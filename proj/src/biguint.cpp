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

#include "shuffledp/biguint.hpp"

#include <algorithm>
#include <stdexcept>

namespace shuffledp {

BigUint::BigUint(std::uint64_t value) {
  if (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
    if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
  }
}

BigUint BigUint::factorial(std::uint64_t n) {
  BigUint result(1);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (i >= (1ull << 32)) throw std::invalid_argument("factorial arg too large");
    result.mul_add_small(static_cast<std::uint32_t>(i), 0);
  }
  return result;
}

BigUint BigUint::pow(std::uint64_t base, std::uint64_t exp) {
  if (base >= (1ull << 32)) throw std::invalid_argument("pow base too large");
  BigUint result(1);
  for (std::uint64_t i = 0; i < exp; ++i) {
    result.mul_add_small(static_cast<std::uint32_t>(base), 0);
  }
  return result;
}

BigUint BigUint::from_decimal(const std::string& digits) {
  if (digits.empty()) throw std::invalid_argument("empty decimal string");
  BigUint result;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
    result.mul_add_small(10, static_cast<std::uint32_t>(c - '0'));
  }
  return result;
}

BigUint& BigUint::mul_add_small(std::uint32_t mul, std::uint32_t add) {
  if (mul == 0) throw std::invalid_argument("mul_add_small: zero multiplier");
  std::uint64_t carry = add;
  for (auto& limb : limbs_) {
    std::uint64_t v = static_cast<std::uint64_t>(limb) * mul + carry;
    limb = static_cast<std::uint32_t>(v & 0xffffffffu);
    carry = v >> 32;
  }
  while (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
    carry >>= 32;
  }
  trim();
  return *this;
}

std::uint32_t BigUint::divmod_small(std::uint32_t div) {
  if (div == 0) throw std::invalid_argument("divmod_small: zero divisor");
  std::uint64_t rem = 0;
  for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
    std::uint64_t cur = (rem << 32) | *it;
    *it = static_cast<std::uint32_t>(cur / div);
    rem = cur % div;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t v = carry + limbs_[i];
    if (i < rhs.limbs_.size()) v += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(v & 0xffffffffu);
    carry = v >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (*this < rhs) throw std::underflow_error("BigUint subtraction underflow");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(limbs_[i]) - borrow;
    if (i < rhs.limbs_.size()) v -= rhs.limbs_[i];
    borrow = 0;
    if (v < 0) {
      v += (1ll << 32);
      borrow = 1;
    }
    limbs_[i] = static_cast<std::uint32_t>(v);
  }
  trim();
  return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::uint64_t BigUint::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigUint exceeds 64 bits");
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  BigUint tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    out.push_back(static_cast<char>('0' + tmp.divmod_small(10)));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

}  // namespace shuffledp
