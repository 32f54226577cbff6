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

#include "ecff/keys.hpp"

#include <utility>

#include "ecff/errors.hpp"

namespace ecff {

namespace {

std::uint64_t checked_base_order(const Point& base) {
  group_order(base.curve());
  const std::uint64_t n = point_order(base.curve(), base);
  if (n < 2) throw InvalidKey("base point must not be the point at infinity");
  return n;
}

}  // namespace

Domain::Domain(const Point& base, const Point& table_generator, std::string_view alphabet)
    : base_(base),
      base_order_(checked_base_order(base)),
      table_(CodeTable::from_generator(table_generator, alphabet)) {
  if (!(table_generator.curve() == base.curve())) {
    throw CurveMismatch("code table generator and base point lie on different curves");
  }
}

bool operator==(const Domain& lhs, const Domain& rhs) noexcept {
  return lhs.base_ == rhs.base_ && lhs.table_.generator() == rhs.table_.generator() &&
         lhs.table_.alphabet() == rhs.table_.alphabet();
}

PrivateKey::PrivateKey(const Domain& domain, std::uint64_t scalar, const Point& point,
                       std::string owner)
    : scalar_(scalar),
      point_(point),
      base_(domain.base()),
      base_order_(domain.base_order()),
      owner_(std::move(owner)) {
  if (scalar_ == 0 || scalar_ >= base_order_) {
    throw ScalarOutOfRange("private scalar " + std::to_string(scalar_) + " outside [1, " +
                           std::to_string(base_order_ - 1) + "]");
  }
  if (!(point_.curve() == base_.curve())) {
    throw CurveMismatch("private point lies on a different curve");
  }
  if (point_.is_infinity()) throw InvalidKey("private point must not be the point at infinity");
}

GeneralPublicKey PrivateKey::public_key() const {
  return {scalar_ * (base_ + point_), scalar_ * point_, owner_};
}

KeyPair keygen(const Domain& domain, Rng& rng, std::string owner) {
  const std::uint64_t n = domain.base_order();
  const std::uint64_t scalar = rng.uniform(1, n - 1);
  const Point point = rng.uniform(1, n - 1) * domain.base();
  PrivateKey secret(domain, scalar, point, std::move(owner));
  GeneralPublicKey general = secret.public_key();
  return {std::move(secret), std::move(general)};
}

SpecificPublicKey derive_specific(const PrivateKey& mine, const Point& peer_k2,
                                  std::string audience) {
  if (!(peer_k2.curve() == mine.curve())) {
    throw CurveMismatch("peer public key lies on a different curve");
  }
  return {mine.scalar() * peer_k2, mine.owner(), std::move(audience)};
}

SpecificPublicKey derive_specific(const PrivateKey& mine, const GeneralPublicKey& peer) {
  return derive_specific(mine, peer.k2, peer.owner);
}

}  // namespace ecff
