// Copyright 2026 The ecff Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>

namespace ecff {

// Exact arithmetic in Z/pZ for primes 3 < p < 2^61. Residues are plain
// 64-bit words; products are formed in 128 bits so nothing overflows.

// A validated prime modulus.
class Prime {
 public:
  static constexpr std::uint64_t kMaxExclusive = std::uint64_t{1} << 61;

  // Throws ModulusOutOfRange for value <= 3 or value >= 2^61, NotPrime if
  // the deterministic Miller-Rabin test rejects it.
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

class FieldElement {
 public:
  // Reduces `value` into [0, p).
  FieldElement(std::uint64_t value, Prime modulus) noexcept;
  static FieldElement from_signed(std::int64_t value, Prime modulus) noexcept;
  static FieldElement zero(Prime modulus) noexcept { return {0, modulus}; }
  static FieldElement one(Prime modulus) noexcept { return {1, modulus}; }

  std::uint64_t residue() const noexcept { return residue_; }
  Prime modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return residue_ == 0; }

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  FieldElement operator-() const noexcept;

  // Elements of different fields compare unequal rather than throwing.
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::uint64_t residue_;
  Prime modulus_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

// Named forms of the operators, for call sites that read better that way.
// All binary operations throw ModulusMismatch on differing moduli.
FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a) noexcept;

// Multiplicative inverse by the extended Euclidean algorithm. Throws
// NonInvertible for zero.
FieldElement inv(const FieldElement& a);

// a^e by square-and-multiply; pow(a, 0) == 1, including for a == 0.
FieldElement pow(const FieldElement& a, std::uint64_t e) noexcept;

// Euler's criterion: 0 for zero, +1 for a nonzero square, -1 otherwise.
int legendre(const FieldElement& a) noexcept;

// Square roots of `a`. For a nonzero square returns {r, p - r} with
// r < p - r; for zero returns {0, 0}; otherwise nullopt. Uses the
// (p+1)/4 exponent when p = 3 (mod 4) and Tonelli-Shanks otherwise.
struct SquareRoots {
  FieldElement first;
  FieldElement second;
  // True when both roots coincide (a == 0).
  bool single() const noexcept { return first == second; }
};
std::optional<SquareRoots> sqrt(const FieldElement& a) noexcept;

namespace detail {

__extension__ typedef unsigned __int128 uint128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

}  // namespace detail

}  // namespace ecff
