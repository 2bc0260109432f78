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

#ifndef SHUFFLEDP_BIGUINT_HPP_
#define SHUFFLEDP_BIGUINT_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace shuffledp {

// Arbitrary-precision unsigned integer, little-endian base-2^32 limbs.
// Supports exactly the operations the pointer-chasing and pointer-jumping
// encodings need: small-constant multiply/add/divmod, big add/sub, compare.
// No limb is ever left as a redundant leading zero (zero has no limbs).
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t value);

  static BigUint factorial(std::uint64_t n);
  static BigUint pow(std::uint64_t base, std::uint64_t exp);
  static BigUint from_decimal(const std::string& digits);

  bool is_zero() const { return limbs_.empty(); }

  // value := value * mul + add.  Requires mul >= 1 and both < 2^32.
  BigUint& mul_add_small(std::uint32_t mul, std::uint32_t add);

  // value := value / div; returns the remainder.  Requires 1 <= div < 2^32.
  std::uint32_t divmod_small(std::uint32_t div);

  BigUint& operator+=(const BigUint& rhs);
  // Requires *this >= rhs.
  BigUint& operator-=(const BigUint& rhs);

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BigUint operator-(BigUint lhs, const BigUint& rhs) {
    lhs -= rhs;
    return lhs;
  }

  std::strong_ordering operator<=>(const BigUint& rhs) const;
  bool operator==(const BigUint& rhs) const = default;

  bool fits_u64() const { return limbs_.size() <= 2; }
  // Throws std::overflow_error when the value exceeds 64 bits.
  std::uint64_t to_u64() const;

  std::string to_string() const;  // decimal
  std::size_t bit_length() const;

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

}  // namespace shuffledp

#endif  // SHUFFLEDP_BIGUINT_HPP_
