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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecff/codec.hpp"
#include "ecff/ecgroup.hpp"
#include "ecff/keys.hpp"
#include "ecff/rng.hpp"

namespace ecff {

// Ciphertext of one message point.
struct CipherPair {
  Point e1;
  Point e2;

  friend bool operator==(const CipherPair&, const CipherPair&) = default;
};

// Everything the sender needs: their own secret, the recipient's general
// public key, and the specific key the recipient published for them.
class EncryptionContext {
 public:
  // Throws CurveMismatch unless every point shares the table's curve, and
  // InvalidKey when the specific key was not issued by the recipient for
  // this sender.
  EncryptionContext(Domain domain, PrivateKey sender, GeneralPublicKey recipient,
                    SpecificPublicKey recipient_for_sender);

  const Domain& domain() const noexcept { return domain_; }
  const CodeTable& table() const noexcept { return domain_.table(); }
  const PrivateKey& sender() const noexcept { return sender_; }
  const GeneralPublicKey& recipient() const noexcept { return recipient_; }
  const SpecificPublicKey& recipient_for_sender() const noexcept { return specific_; }

 private:
  Domain domain_;
  PrivateKey sender_;
  GeneralPublicKey recipient_;
  SpecificPublicKey specific_;
};

class DecryptionContext {
 public:
  // Same checks as EncryptionContext, mirrored.
  DecryptionContext(Domain domain, PrivateKey recipient, GeneralPublicKey sender,
                    SpecificPublicKey sender_for_recipient);

  const Domain& domain() const noexcept { return domain_; }
  const CodeTable& table() const noexcept { return domain_.table(); }
  const PrivateKey& recipient() const noexcept { return recipient_; }
  const Point& sender_k1() const noexcept { return sender_k1_; }
  const SpecificPublicKey& sender_for_recipient() const noexcept { return specific_; }

 private:
  Domain domain_;
  PrivateKey recipient_;
  Point sender_k1_;
  SpecificPublicKey specific_;
};

// E1 = gamma*C, E2 = M + (beta + gamma)*A1 - gamma*A2 + A_B.
// Throws ScalarOutOfRange unless 1 <= gamma < ord(C).
CipherPair encrypt_point(const EncryptionContext& ctx, const Point& message,
                         std::uint64_t gamma);

// M = E2 - (alpha*E1 + alpha*B1 + B_A). Throws InvalidCiphertext for points
// that are not on the context's curve.
Point decrypt_point(const DecryptionContext& ctx, const CipherPair& cipher);

// `count` nonces uniform in [1, n-1], pairwise distinct. Throws
// MessageTooLongForDistinctNonces when count > n - 1.
std::vector<std::uint64_t> draw_nonces(std::uint64_t n, std::size_t count, Rng& rng);

// One CipherPair per symbol with caller-chosen nonces. Throws
// NonceCountMismatch, ScalarOutOfRange, DuplicateNonce (equal mod n) and
// SymbolNotInAlphabet.
std::vector<CipherPair> encrypt_symbols(const EncryptionContext& ctx, std::string_view msg,
                                        std::span<const std::uint64_t> gammas);

// Ciphertext text: e1 and e2 of each symbol rendered through the code
// table and concatenated, so the output is twice as long as `msg`.
std::string encrypt_message(const EncryptionContext& ctx, std::string_view msg,
                            std::span<const std::uint64_t> gammas);
std::string encrypt_message(const EncryptionContext& ctx, std::string_view msg, Rng& rng);

// Throws MalformedCiphertext for odd length and SymbolNotInAlphabet.
std::vector<CipherPair> parse_ciphertext(const CodeTable& table, std::string_view cipher);
std::string render_ciphertext(const CodeTable& table, std::span<const CipherPair> pairs);

std::string decrypt_message(const DecryptionContext& ctx, std::string_view cipher);

}  // namespace ecff
