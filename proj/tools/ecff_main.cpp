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

// ecff: command-line front end.
//
//   ecff curve init --p 37 --a 2 --b 9 --base 9,4 --generator 5,25 --out curve.ecff
//   ecff curve points --curve curve.ecff
//   ecff keygen --curve curve.ecff --out-private a.ecff --out-public a.pub.ecff --seed 1
//   ecff derive-specific --private a.ecff --peer-public b.pub.ecff --out a_for_b.ecff
//   ecff encrypt --private b.ecff --peer-public a.pub.ecff --peer-specific a_for_b.ecff --message attack
//   ecff decrypt --private a.ecff --peer-public b.pub.ecff --peer-specific b_for_a.ecff --cipher ...
//
// Exit status: 0 on success, 1 for usage errors, 2 for invalid data.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecff/ecff.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ecff::Point point_arg(const ecff::Curve& curve, const std::string& flag, const std::string& text) {
  auto pt = ecff::parse_point(curve, text);
  if (!pt) throw UsageError(flag + ": expected X,Y or inf, got '" + text + "'");
  return *pt;
}

void require_same_domain(const ecff::Domain& lhs, const ecff::Domain& rhs,
                         const std::string& file) {
  if (!(lhs == rhs)) {
    throw ecff::InvalidKey(file + " uses a different curve, base point or code table");
  }
}

struct CurveInitArgs {
  std::uint64_t p = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::string base;
  std::string generator;
  std::string alphabet{ecff::kCanonicalAlphabet};
  std::string out;
};

int run_curve_init(const CurveInitArgs& args) {
  const ecff::Prime p(args.p);
  const ecff::Curve curve(p, ecff::FieldElement(args.a, p), ecff::FieldElement(args.b, p));
  const ecff::Point base = point_arg(curve, "--base", args.base);
  const ecff::Point generator =
      args.generator.empty() ? base : point_arg(curve, "--generator", args.generator);
  const ecff::Domain domain(base, generator, args.alphabet);
  ecff::write_text_file(args.out, ecff::serialize(domain));
  std::cout << "group order: " << *curve.order() << '\n'
            << "base order: " << domain.base_order() << '\n';
  return 0;
}

int run_curve_points(const std::string& curve_file) {
  const ecff::Domain domain = ecff::load_domain(ecff::read_text_file(curve_file));
  for (const ecff::Point& pt : ecff::enumerate_points(domain.curve())) std::cout << pt << '\n';
  return 0;
}

struct KeygenArgs {
  std::string curve;
  std::string out_private;
  std::string out_public;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> alpha;
  std::string point;
  std::string id{ecff::kAnonymous};
};

int run_keygen(const KeygenArgs& args) {
  const ecff::Domain domain = ecff::load_domain(ecff::read_text_file(args.curve));
  std::optional<ecff::PrivateKey> secret;
  if (args.alpha) {
    secret.emplace(domain, *args.alpha, point_arg(domain.curve(), "--point", args.point), args.id);
  } else if (args.seed) {
    ecff::SeededRng rng(*args.seed);
    secret.emplace(ecff::keygen(domain, rng, args.id).secret);
  } else {
    ecff::SystemRng rng;
    secret.emplace(ecff::keygen(domain, rng, args.id).secret);
  }
  const ecff::GeneralPublicKey general = secret->public_key();
  ecff::write_text_file(args.out_private, ecff::serialize(domain, *secret));
  ecff::write_text_file(args.out_public, ecff::serialize(domain, general));
  std::cout << "pub1 = " << general.k1 << '\n' << "pub2 = " << general.k2 << '\n';
  return 0;
}

int run_derive_specific(const std::string& private_file, const std::string& peer_file,
                        const std::string& out) {
  const auto mine = ecff::load_private(ecff::read_text_file(private_file));
  const auto peer = ecff::load_general(ecff::read_text_file(peer_file));
  require_same_domain(mine.domain, peer.domain, peer_file);
  const ecff::SpecificPublicKey specific = ecff::derive_specific(mine.key, peer.key);
  ecff::write_text_file(out, ecff::serialize(mine.domain, specific));
  std::cout << "specific = " << specific.point << '\n';
  return 0;
}

struct PartyFiles {
  std::string private_file;
  std::string peer_public;
  std::string peer_specific;
};

struct LoadedParties {
  ecff::PrivateKeyFile mine;
  ecff::GeneralPublicKeyFile peer;
  ecff::SpecificPublicKeyFile specific;
};

LoadedParties load_parties(const PartyFiles& files) {
  auto mine = ecff::load_private(ecff::read_text_file(files.private_file));
  auto peer = ecff::load_general(ecff::read_text_file(files.peer_public));
  auto specific = ecff::load_specific(ecff::read_text_file(files.peer_specific));
  require_same_domain(mine.domain, peer.domain, files.peer_public);
  require_same_domain(mine.domain, specific.domain, files.peer_specific);
  return {std::move(mine), std::move(peer), std::move(specific)};
}

struct EncryptArgs {
  PartyFiles files;
  std::string message;
  std::vector<std::uint64_t> gammas;
  std::optional<std::uint64_t> seed;
};

int run_encrypt(const EncryptArgs& args) {
  LoadedParties parties = load_parties(args.files);
  const ecff::EncryptionContext ctx(parties.mine.domain, parties.mine.key, parties.peer.key,
                                    parties.specific.key);
  std::string cipher;
  if (!args.gammas.empty()) {
    if (args.gammas.size() != args.message.size()) {
      throw UsageError("--gammas: " + std::to_string(args.gammas.size()) + " values for a " +
                       std::to_string(args.message.size()) + "-symbol message");
    }
    cipher = ecff::encrypt_message(ctx, args.message, args.gammas);
  } else if (args.seed) {
    ecff::SeededRng rng(*args.seed);
    cipher = ecff::encrypt_message(ctx, args.message, rng);
  } else {
    ecff::SystemRng rng;
    cipher = ecff::encrypt_message(ctx, args.message, rng);
  }
  std::cout << cipher << '\n';
  return 0;
}

int run_decrypt(const PartyFiles& files, const std::string& cipher) {
  LoadedParties parties = load_parties(files);
  const ecff::DecryptionContext ctx(parties.mine.domain, parties.mine.key, parties.peer.key,
                                    parties.specific.key);
  std::cout << ecff::decrypt_message(ctx, cipher) << '\n';
  return 0;
}

void add_party_options(CLI::App* cmd, PartyFiles& files, const char* specific_help) {
  cmd->add_option("--private", files.private_file, "Your private key file")->required();
  cmd->add_option("--peer-public", files.peer_public, "The peer's general public key file")
      ->required();
  cmd->add_option("--peer-specific", files.peer_specific, specific_help)->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic-curve encryption over prime fields with per-peer specific keys"};
  app.require_subcommand(1);

  auto* curve_cmd = app.add_subcommand("curve", "Create or inspect curve files");
  curve_cmd->require_subcommand(1);

  CurveInitArgs init;
  auto* init_cmd = curve_cmd->add_subcommand("init", "Write a curve file");
  init_cmd->add_option("--p", init.p, "Field prime")->required();
  init_cmd->add_option("--a", init.a, "Coefficient a")->required();
  init_cmd->add_option("--b", init.b, "Coefficient b")->required();
  init_cmd->add_option("--base", init.base, "Shared base point C as X,Y")->required();
  init_cmd->add_option("--generator", init.generator,
                       "Code table generator as X,Y (defaults to the base point)");
  init_cmd->add_option("--alphabet", init.alphabet, "Code table alphabet");
  init_cmd->add_option("--out", init.out, "Output file")->required();

  std::string points_curve;
  auto* points_cmd = curve_cmd->add_subcommand("points", "List every point of the curve");
  points_cmd->add_option("--curve", points_curve, "Curve file")->required();

  KeygenArgs keygen;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a private key and general public key");
  keygen_cmd->add_option("--curve", keygen.curve, "Curve file")->required();
  keygen_cmd->add_option("--out-private", keygen.out_private, "Private key output")->required();
  keygen_cmd->add_option("--out-public", keygen.out_public, "Public key output")->required();
  keygen_cmd->add_option("--id", keygen.id, "Party identifier");
  auto* seed_opt = keygen_cmd->add_option("--seed", keygen.seed, "Deterministic RNG seed");
  auto* alpha_opt = keygen_cmd->add_option("--alpha", keygen.alpha, "Explicit private scalar");
  auto* point_opt = keygen_cmd->add_option("--point", keygen.point, "Explicit private point X,Y");
  alpha_opt->needs(point_opt);
  point_opt->needs(alpha_opt);
  seed_opt->excludes(alpha_opt)->excludes(point_opt);

  std::string derive_private;
  std::string derive_peer;
  std::string derive_out;
  auto* derive_cmd =
      app.add_subcommand("derive-specific", "Derive the specific public key for one peer");
  derive_cmd->add_option("--private", derive_private, "Your private key file")->required();
  derive_cmd->add_option("--peer-public", derive_peer, "The peer's general public key file")
      ->required();
  derive_cmd->add_option("--out", derive_out, "Output file")->required();

  EncryptArgs encrypt;
  auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a message for a peer");
  add_party_options(encrypt_cmd, encrypt.files,
                    "Specific key the recipient published for you");
  encrypt_cmd->add_option("--message", encrypt.message, "Plaintext")->required();
  auto* gammas_opt = encrypt_cmd->add_option("--gammas", encrypt.gammas,
                                             "Explicit per-symbol nonces, comma separated")
                         ->delimiter(',');
  auto* enc_seed_opt = encrypt_cmd->add_option("--seed", encrypt.seed, "Deterministic RNG seed");
  gammas_opt->excludes(enc_seed_opt);

  PartyFiles decrypt_files;
  std::string cipher;
  auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt a message from a peer");
  add_party_options(decrypt_cmd, decrypt_files, "Specific key the sender published for you");
  decrypt_cmd->add_option("--cipher", cipher, "Ciphertext")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*init_cmd) return run_curve_init(init);
    if (*points_cmd) return run_curve_points(points_curve);
    if (*keygen_cmd) return run_keygen(keygen);
    if (*derive_cmd) return run_derive_specific(derive_private, derive_peer, derive_out);
    if (*encrypt_cmd) return run_encrypt(encrypt);
    if (*decrypt_cmd) return run_decrypt(decrypt_files, cipher);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ecff::NonceCountMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ecff::SingularCurve&) {
    std::cerr << "error: singular curve\n";
    return kExitData;
  } catch (const ecff::NotPrime& e) {
    std::cerr << "error: not prime: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
