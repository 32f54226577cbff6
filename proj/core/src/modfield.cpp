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

#include "ecff/modfield.hpp"

#include <array>
#include <ostream>
#include <string>

#include "ecff/errors.hpp"

namespace ecff {

namespace detail {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  // The first twelve primes are a deterministic witness set below 2^64.
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13,
                                                               17, 19, 23, 29, 31, 37};
  for (std::uint64_t w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t w : kWitnesses) {
    std::uint64_t x = detail::pow_mod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (value <= 3 || value >= kMaxExclusive) {
    throw ModulusOutOfRange("modulus " + std::to_string(value) +
                            " outside supported range (3, 2^61)");
  }
  if (!is_prime(value)) throw NotPrime(std::to_string(value) + " is not prime");
}

FieldElement::FieldElement(std::uint64_t value, Prime modulus) noexcept
    : residue_(value % modulus.value()), modulus_(modulus) {}

FieldElement FieldElement::from_signed(std::int64_t value, Prime modulus) noexcept {
  const auto p = static_cast<std::int64_t>(modulus.value());
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r), modulus};
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw ModulusMismatch("field elements mod " + std::to_string(a.modulus().value()) +
                          " and mod " + std::to_string(b.modulus().value()));
  }
}

}  // namespace

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(*this, rhs);
  const std::uint64_t p = modulus_.value();
  // Both operands are below 2^61, so the sum cannot wrap.
  residue_ += rhs.residue_;
  if (residue_ >= p) residue_ -= p;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(*this, rhs);
  residue_ = residue_ >= rhs.residue_ ? residue_ - rhs.residue_
                                      : residue_ + modulus_.value() - rhs.residue_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(*this, rhs);
  residue_ = detail::mul_mod(residue_, rhs.residue_, modulus_.value());
  return *this;
}

FieldElement FieldElement::operator-() const noexcept {
  return {residue_ == 0 ? 0 : modulus_.value() - residue_, modulus_};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.residue() << " (mod " << e.modulus().value() << ")";
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement neg(const FieldElement& a) noexcept { return -a; }

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) {
    throw NonInvertible("0 has no inverse mod " + std::to_string(a.modulus().value()));
  }
  // Extended Euclid on (p, a), tracking only the coefficient of a.
  std::int64_t old_r = static_cast<std::int64_t>(a.modulus().value());
  std::int64_t r = static_cast<std::int64_t>(a.residue());
  std::int64_t old_t = 0;
  std::int64_t t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_t = std::exchange(t, old_t - q * t);
  }
  return FieldElement::from_signed(old_t, a.modulus());
}

FieldElement pow(const FieldElement& a, std::uint64_t e) noexcept {
  return {detail::pow_mod(a.residue(), e, a.modulus().value()), a.modulus()};
}

int legendre(const FieldElement& a) noexcept {
  if (a.is_zero()) return 0;
  const std::uint64_t p = a.modulus().value();
  return pow(a, (p - 1) / 2).residue() == 1 ? 1 : -1;
}

namespace {

FieldElement tonelli_shanks(const FieldElement& a) noexcept {
  const Prime modulus = a.modulus();
  const std::uint64_t p = modulus.value();

  // p - 1 = q * 2^s with q odd.
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }

  FieldElement z(2, modulus);
  while (legendre(z) != -1) z += FieldElement::one(modulus);

  unsigned m = s;
  FieldElement c = pow(z, q);
  FieldElement t = pow(a, q);
  FieldElement r = pow(a, (q + 1) / 2);
  const FieldElement one = FieldElement::one(modulus);

  while (t != one) {
    // Least i with t^(2^i) == 1; 0 < i < m because a is a residue.
    unsigned i = 0;
    FieldElement t2i = t;
    while (t2i != one) {
      t2i *= t2i;
      ++i;
    }
    FieldElement b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    m = i;
    c = b * b;
    t *= c;
    r *= b;
  }
  return r;
}

}  // namespace

std::optional<SquareRoots> sqrt(const FieldElement& a) noexcept {
  const Prime modulus = a.modulus();
  if (a.is_zero()) return SquareRoots{a, a};
  if (legendre(a) != 1) return std::nullopt;

  const std::uint64_t p = modulus.value();
  FieldElement r = (p % 4 == 3) ? pow(a, (p + 1) / 4) : tonelli_shanks(a);
  FieldElement other = -r;
  if (other.residue() < r.residue()) std::swap(r, other);
  return SquareRoots{r, other};
}

}  // namespace ecff
