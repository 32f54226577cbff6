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

#include <cstdint>
#include <string>
#include <string_view>

#include "ecff/codec.hpp"
#include "ecff/ecgroup.hpp"
#include "ecff/rng.hpp"

namespace ecff {

// Public parameters two parties agree on before exchanging keys: the
// curve, the shared base point C and the code table.
class Domain {
 public:
  // Enumerates the curve if its order is not cached yet, so p must be at
  // most 2^20 in that case. Throws InvalidKey when the base point has order
  // below 2, plus anything CodeTable::from_generator throws.
  Domain(const Point& base, const Point& table_generator,
         std::string_view alphabet = kCanonicalAlphabet);

  const Curve& curve() const noexcept { return base_.curve(); }
  const Point& base() const noexcept { return base_; }
  std::uint64_t base_order() const noexcept { return base_order_; }
  const CodeTable& table() const noexcept { return table_; }

  friend bool operator==(const Domain& lhs, const Domain& rhs) noexcept;

 private:
  Point base_;
  std::uint64_t base_order_;
  CodeTable table_;
};

inline constexpr std::string_view kAnonymous = "anonymous";

// (A1, A2) = (s(C + A), sA), published to everyone.
struct GeneralPublicKey {
  Point k1;
  Point k2;
  std::string owner{kAnonymous};

  friend bool operator==(const GeneralPublicKey&, const GeneralPublicKey&) = default;
};

// s * (peer's k2), published by `issuer` for use by `audience` only.
struct SpecificPublicKey {
  Point point;
  std::string issuer{kAnonymous};
  std::string audience{kAnonymous};

  friend bool operator==(const SpecificPublicKey&, const SpecificPublicKey&) = default;
};

// The secret pair (s, A) together with the base point it was made for.
class PrivateKey {
 public:
  // Throws ScalarOutOfRange unless 1 <= scalar < ord(base), InvalidKey
  // when point is infinity and CurveMismatch when it lies on another curve.
  PrivateKey(const Domain& domain, std::uint64_t scalar, const Point& point,
             std::string owner = std::string(kAnonymous));

  std::uint64_t scalar() const noexcept { return scalar_; }
  const Point& point() const noexcept { return point_; }
  const Point& base() const noexcept { return base_; }
  const Curve& curve() const noexcept { return base_.curve(); }
  std::uint64_t base_order() const noexcept { return base_order_; }
  const std::string& owner() const noexcept { return owner_; }

  GeneralPublicKey public_key() const;

  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;

 private:
  std::uint64_t scalar_;
  Point point_;
  Point base_;
  std::uint64_t base_order_;
  std::string owner_;
};

struct KeyPair {
  PrivateKey secret;
  GeneralPublicKey general;
};

// Scalar uniform in [1, n-1]; private point t*C for t uniform in [1, n-1].
KeyPair keygen(const Domain& domain, Rng& rng, std::string owner = std::string(kAnonymous));

// Throws CurveMismatch when peer_k2 lives on another curve.
SpecificPublicKey derive_specific(const PrivateKey& mine, const Point& peer_k2,
                                  std::string audience = std::string(kAnonymous));
SpecificPublicKey derive_specific(const PrivateKey& mine, const GeneralPublicKey& peer);

}  // namespace ecff
