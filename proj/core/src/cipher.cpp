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

#include "ecff/cipher.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "ecff/errors.hpp"

namespace ecff {

namespace {

void require_on(const Curve& curve, const Point& pt, const char* what) {
  if (!(pt.curve() == curve)) throw CurveMismatch(std::string(what) + " lies on a different curve");
}

void require_specific(const SpecificPublicKey& key, const std::string& issuer,
                      const std::string& audience) {
  if (key.issuer != issuer || key.audience != audience) {
    throw InvalidKey("specific key was issued by '" + key.issuer + "' for '" + key.audience +
                     "', expected '" + issuer + "' for '" + audience + "'");
  }
}

}  // namespace

EncryptionContext::EncryptionContext(Domain domain, PrivateKey sender, GeneralPublicKey recipient,
                                     SpecificPublicKey recipient_for_sender)
    : domain_(std::move(domain)),
      sender_(std::move(sender)),
      recipient_(std::move(recipient)),
      specific_(std::move(recipient_for_sender)) {
  const Curve& curve = domain_.curve();
  require_on(curve, sender_.point(), "sender key");
  if (!(sender_.base() == domain_.base())) {
    throw InvalidKey("sender key was made for a different base point");
  }
  require_on(curve, recipient_.k1, "recipient key");
  require_on(curve, recipient_.k2, "recipient key");
  require_on(curve, specific_.point, "recipient specific key");
  require_specific(specific_, recipient_.owner, sender_.owner());
}

DecryptionContext::DecryptionContext(Domain domain, PrivateKey recipient, GeneralPublicKey sender,
                                     SpecificPublicKey sender_for_recipient)
    : domain_(std::move(domain)),
      recipient_(std::move(recipient)),
      sender_k1_(sender.k1),
      specific_(std::move(sender_for_recipient)) {
  const Curve& curve = domain_.curve();
  require_on(curve, recipient_.point(), "recipient key");
  if (!(recipient_.base() == domain_.base())) {
    throw InvalidKey("recipient key was made for a different base point");
  }
  require_on(curve, sender_k1_, "sender key");
  require_on(curve, specific_.point, "sender specific key");
  require_specific(specific_, sender.owner, recipient_.owner());
}

CipherPair encrypt_point(const EncryptionContext& ctx, const Point& message,
                         std::uint64_t gamma) {
  const PrivateKey& sender = ctx.sender();
  const std::uint64_t n = sender.base_order();
  if (gamma == 0 || gamma >= n) {
    throw ScalarOutOfRange("nonce " + std::to_string(gamma) + " outside [1, " +
                           std::to_string(n - 1) + "]");
  }
  require_on(sender.curve(), message, "message point");

  const GeneralPublicKey& recipient = ctx.recipient();
  Point e1 = gamma * sender.base();
  if (e1.is_infinity()) throw std::logic_error("gamma * C is infinity for gamma < ord(C)");
  // beta + gamma < 2n, no overflow.
  Point e2 = message + (sender.scalar() + gamma) * recipient.k1 - gamma * recipient.k2 +
             ctx.recipient_for_sender().point;
  return {std::move(e1), std::move(e2)};
}

Point decrypt_point(const DecryptionContext& ctx, const CipherPair& cipher) {
  const Curve& curve = ctx.domain().curve();
  if (!curve.contains(cipher.e1) || !curve.contains(cipher.e2)) {
    throw InvalidCiphertext("ciphertext point is not on the curve");
  }
  const std::uint64_t alpha = ctx.recipient().scalar();
  const Point mask =
      alpha * cipher.e1 + alpha * ctx.sender_k1() + ctx.sender_for_recipient().point;
  return cipher.e2 - mask;
}

std::vector<std::uint64_t> draw_nonces(std::uint64_t n, std::size_t count, Rng& rng) {
  if (n < 2 || count > n - 1) {
    throw MessageTooLongForDistinctNonces(std::to_string(count) +
                                          " symbols need distinct nonces but only " +
                                          std::to_string(n < 2 ? 0 : n - 1) + " exist");
  }
  std::vector<std::uint64_t> nonces;
  nonces.reserve(count);
  std::unordered_set<std::uint64_t> used;
  while (nonces.size() < count) {
    const std::uint64_t g = rng.uniform(1, n - 1);
    if (used.insert(g).second) nonces.push_back(g);
  }
  return nonces;
}

std::vector<CipherPair> encrypt_symbols(const EncryptionContext& ctx, std::string_view msg,
                                        std::span<const std::uint64_t> gammas) {
  if (gammas.size() != msg.size()) {
    throw NonceCountMismatch(std::to_string(gammas.size()) + " nonces for " +
                             std::to_string(msg.size()) + " symbols");
  }
  const std::uint64_t n = ctx.sender().base_order();
  if (msg.size() > n - 1) {
    throw MessageTooLongForDistinctNonces(std::to_string(msg.size()) +
                                          " symbols need distinct nonces but only " +
                                          std::to_string(n - 1) + " exist");
  }
  const std::vector<Point> points = ctx.table().encode_message(msg);

  std::unordered_set<std::uint64_t> used;
  std::vector<CipherPair> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Range is checked by encrypt_point; only distinctness here.
    if (gammas[i] != 0 && gammas[i] < n && !used.insert(gammas[i]).second) {
      throw DuplicateNonce("nonce " + std::to_string(gammas[i]) + " repeated at position " +
                           std::to_string(i));
    }
    out.push_back(encrypt_point(ctx, points[i], gammas[i]));
  }
  return out;
}

std::string render_ciphertext(const CodeTable& table, std::span<const CipherPair> pairs) {
  std::string out;
  out.reserve(2 * pairs.size());
  for (const CipherPair& cp : pairs) {
    out.push_back(table.decode_point(cp.e1));
    out.push_back(table.decode_point(cp.e2));
  }
  return out;
}

std::string encrypt_message(const EncryptionContext& ctx, std::string_view msg,
                            std::span<const std::uint64_t> gammas) {
  return render_ciphertext(ctx.table(), encrypt_symbols(ctx, msg, gammas));
}

std::string encrypt_message(const EncryptionContext& ctx, std::string_view msg, Rng& rng) {
  // Validate the text before consuming randomness.
  ctx.table().encode_message(msg);
  const auto gammas = draw_nonces(ctx.sender().base_order(), msg.size(), rng);
  return encrypt_message(ctx, msg, gammas);
}

std::vector<CipherPair> parse_ciphertext(const CodeTable& table, std::string_view cipher) {
  if (cipher.size() % 2 != 0) {
    throw MalformedCiphertext("ciphertext length " + std::to_string(cipher.size()) +
                              " is odd");
  }
  const std::vector<Point> points = table.encode_message(cipher);
  std::vector<CipherPair> pairs;
  pairs.reserve(points.size() / 2);
  for (std::size_t i = 0; i < points.size(); i += 2) pairs.push_back({points[i], points[i + 1]});
  return pairs;
}

std::string decrypt_message(const DecryptionContext& ctx, std::string_view cipher) {
  std::string out;
  out.reserve(cipher.size() / 2);
  for (const CipherPair& cp : parse_ciphertext(ctx.table(), cipher)) {
    out.push_back(ctx.table().decode_point(decrypt_point(ctx, cp)));
  }
  return out;
}

}  // namespace ecff
