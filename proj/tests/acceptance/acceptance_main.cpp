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

// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "ecff/ecff.hpp"
#include "support/paper_scenario.hpp"
#include "support/process.hpp"

namespace {

using namespace ecff;
using ecff::testing::XY;
using Clock = std::chrono::steady_clock;
using PointSet = std::unordered_set<Point, PointHash>;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Published step-by-step values of the worked example.
const std::vector<std::uint64_t> kGammas = {8, 12, 19, 2, 3, 23};
const std::vector<XY> kPaperE1 = {{1, 30}, {21, 32}, {4, 9}, {29, 31}, {1, 30}, {25, 25}};
const std::vector<XY> kPaperE2 = {{2, 13}, {2, 24}, {27, 32}, {1, 30}, {31, 22}, {4, 28}};
const std::vector<XY> kPaperRecovered = {{5, 25},  {10, 17}, {10, 17},
                                         {5, 25},  {21, 32}, {9, 4}};

Domain second_domain() {
  const Curve c(1013, 3, 5);
  const auto pts = enumerate_points(c);
  return Domain(pts.at(1), pts.at(2));
}

// A second 43-point curve; its code table covers the whole group, which the
// symbol-encoded ciphertext needs for every E1 and E2 to have a symbol.
Domain covered_domain() {
  const Curve c(41, 6, 15);
  const auto pts = enumerate_points(c);
  return Domain(pts.at(1), pts.at(2));
}

Outcome point_set_reproduction() {
  Outcome o;
  const Curve curve(37, 2, 9);
  const auto start = Clock::now();
  const auto points = enumerate_points(curve);
  const double ms = elapsed_ms(start);
  PointSet expected;
  for (const XY& xy : ecff::testing::kPaperPointList) {
    expected.insert(ecff::testing::to_point(curve, xy));
  }
  if (points.size() != 43) o.fail("got " + std::to_string(points.size()) + " points");
  if (PointSet(points.begin(), points.end()) != expected) o.fail("point set differs");
  if (ms >= 1.0) o.fail("took " + std::to_string(ms) + " ms");
  if (o.pass) o.detail = "43 points, " + std::to_string(ms) + " ms";
  return o;
}

Outcome key_vectors() {
  Outcome o;
  const auto s = ecff::testing::make_paper_scenario();
  auto check = [&](const char* name, const Point& got, std::uint64_t x, std::uint64_t y) {
    if (!(got == s.curve.point(x, y))) {
      o.fail(std::string(name) + " = " + to_string(got));
    }
  };
  check("A1", s.alice_general.k1, 1, 7);
  check("A2", s.alice_general.k2, 33, 23);
  check("B1", s.bob_general.k1, 11, 17);
  check("B2", s.bob_general.k2, 23, 30);
  check("A_B", s.alice_for_bob.point, 15, 11);
  check("B_A", s.bob_for_alice.point, 2, 13);
  if (o.pass) o.detail = "A1 A2 B1 B2 A_B B_A exact";
  return o;
}

Outcome encryption_vectors() {
  Outcome o;
  const auto s = ecff::testing::make_paper_scenario();
  const EncryptionContext enc = s.bob_to_alice();
  const auto pairs = encrypt_symbols(enc, ecff::testing::kPaperPlaintext, kGammas);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Point e1 = ecff::testing::to_point(s.curve, kPaperE1[i]);
    const Point e2 = ecff::testing::to_point(s.curve, kPaperE2[i]);
    if (!(pairs[i].e1 == e1)) {
      o.fail("step " + std::to_string(i + 1) + " E1 " + to_string(pairs[i].e1) + " != " +
             to_string(e1));
    }
    if (!(pairs[i].e2 == e2)) {
      o.fail("step " + std::to_string(i + 1) + " E2 " + to_string(pairs[i].e2) + " != " +
             to_string(e2));
    }
  }
  const std::string cipher = render_ciphertext(s.domain.table(), pairs);
  if (cipher != ecff::testing::kPaperCiphertext) {
    o.fail("ciphertext " + cipher + " != " + std::string(ecff::testing::kPaperCiphertext));
  }
  if (o.pass) o.detail = cipher;
  return o;
}

Outcome decryption_vectors() {
  Outcome o;
  const auto s = ecff::testing::make_paper_scenario();
  const DecryptionContext dec = s.alice_from_bob();
  const auto pairs = parse_ciphertext(s.domain.table(), ecff::testing::kPaperCiphertext);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Point m = decrypt_point(dec, pairs[i]);
    const Point want = ecff::testing::to_point(s.curve, kPaperRecovered[i]);
    if (!(m == want)) {
      o.fail("step " + std::to_string(i + 1) + " M " + to_string(m) + " != " + to_string(want));
    }
  }
  const std::string plain = decrypt_message(dec, ecff::testing::kPaperCiphertext);
  if (plain != ecff::testing::kPaperPlaintext) o.fail("plaintext " + plain + " != attack");
  if (o.pass) o.detail = plain;
  return o;
}

Outcome correctness_identity() {
  Outcome o;
  const std::vector<Domain> domains = {ecff::testing::make_paper_scenario().domain,
                                       second_domain()};
  SeededRng rng(20260101);
  std::size_t failures = 0;
  for (const Domain& d : domains) {
    for (int i = 0; i < 1000; ++i) {
      const KeyPair alice = keygen(d, rng, "alice");
      const KeyPair bob = keygen(d, rng, "bob");
      const SpecificPublicKey ab = derive_specific(alice.secret, bob.general);
      const SpecificPublicKey ba = derive_specific(bob.secret, alice.general);
      const std::uint64_t gamma = rng.uniform(1, d.base_order() - 1);
      const std::uint64_t alpha = alice.secret.scalar();
      const std::uint64_t beta = bob.secret.scalar();
      const Point e1 = gamma * d.base();
      const Point lhs = (beta + gamma) * alice.general.k1 - gamma * alice.general.k2 + ab.point;
      const Point rhs = alpha * e1 + alpha * bob.general.k1 + ba.point;
      if (!(lhs == rhs)) ++failures;
    }
  }
  if (failures != 0) o.fail(std::to_string(failures) + " failures");
  if (o.pass) o.detail = "2000 key sets on E_37(2,9) and E_1013(3,5), 0 failures";
  return o;
}

Outcome group_laws() {
  Outcome o;
  const auto start = Clock::now();
  const Curve curve(37, 2, 9);
  const auto points = enumerate_points(curve);
  std::size_t bad = 0;
  std::size_t pairs = 0;
  for (const Point& p : points) {
    for (const Point& q : points) {
      ++pairs;
      const Point pq = p + q;
      if (!curve.contains(pq) || !(pq == q + p)) ++bad;
    }
  }
  if (bad != 0) o.fail(std::to_string(bad) + " closure/commutativity failures");

  std::size_t triples = 0;
  const Curve small(11, 1, 2);
  const auto small_pts = enumerate_points(small);
  if (small_pts.size() > 20) o.fail("small curve has more than 20 points");
  for (const Point& p : small_pts) {
    for (const Point& q : small_pts) {
      for (const Point& r : small_pts) {
        ++triples;
        if (!((p + q) + r == p + (q + r))) ++bad;
      }
    }
  }
  SeededRng rng(6);
  for (int i = 0; i < 10000; ++i) {
    const Point& p = points[rng.uniform(0, points.size() - 1)];
    const Point& q = points[rng.uniform(0, points.size() - 1)];
    const Point& r = points[rng.uniform(0, points.size() - 1)];
    if (!((p + q) + r == p + (q + r))) ++bad;
  }
  // Lagrange with the literal k-fold sum, so no cached-order reduction.
  for (const Point& p : points) {
    if (!reference::slow_scalar_mul(43, p).is_infinity()) ++bad;
  }
  const double ms = elapsed_ms(start);
  if (bad != 0) o.fail(std::to_string(bad) + " law failures");
  if (ms >= 5000) o.fail("took " + std::to_string(ms) + " ms");
  if (o.pass) {
    o.detail = std::to_string(pairs) + " pairs, " + std::to_string(triples) +
               " exhaustive + 10000 sampled triples, " + std::to_string(ms) + " ms";
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const Curve curve(37, 2, 9);
  const auto points = enumerate_points(curve);
  // A twin curve without the order cache exercises unreduced double-and-add.
  const Curve uncached(37, 2, 9);
  std::size_t mismatches = 0;
  for (const Point& p : points) {
    const Point twin =
        p.is_infinity() ? uncached.infinity() : uncached.point(p.x().residue(), p.y().residue());
    for (std::uint64_t k = 0; k < 86; ++k) {
      if (!(scalar_mul(k, p) == reference::slow_scalar_mul(k, p))) ++mismatches;
      if (!(scalar_mul(k, twin) == reference::slow_scalar_mul(k, twin))) ++mismatches;
    }
  }
  const Point g = curve.point(5, 25);
  for (const Point& q : points) {
    if (reference::ecdlp_bsgs(g, q, 43) != reference::ecdlp_exhaustive(g, q, 43)) ++mismatches;
  }
  if (mismatches != 0) o.fail(std::to_string(mismatches) + " mismatches");
  if (o.pass) o.detail = "k in [0,86) x 43 points, 43 discrete logs";
  return o;
}

Outcome code_table_hypothesis() {
  Outcome o;
  const Curve curve(37, 2, 9);
  const Point g = curve.point(5, 25);
  const CodeTable table = CodeTable::from_generator(g, kCanonicalAlphabet);
  for (std::size_t i = 0; i < 43; ++i) {
    const Point cell = ecff::testing::to_point(curve, ecff::testing::kPaperTable[i]);
    if (!(reference::slow_scalar_mul(i, g) == cell) || !(table.points()[i] == cell)) {
      o.fail(std::string("cell '") + kCanonicalAlphabet[i] + "'");
    }
  }
  if (o.pass) o.detail = "43/43 cells, generator table (no literal fallback)";
  return o;
}

Outcome round_trip() {
  Outcome o;
  const std::vector<Domain> domains = {ecff::testing::make_paper_scenario().domain,
                                       covered_domain()};
  SeededRng rng(909);
  std::size_t failures = 0;
  for (const Domain& d : domains) {
    const std::string& alphabet = d.table().alphabet();
    for (int i = 0; i < 1000; ++i) {
      const KeyPair alice = keygen(d, rng, "alice");
      const KeyPair bob = keygen(d, rng, "bob");
      const EncryptionContext enc(d, bob.secret, alice.general,
                                  derive_specific(alice.secret, bob.general));
      const DecryptionContext dec(d, alice.secret, bob.general,
                                  derive_specific(bob.secret, alice.general));
      std::string msg(rng.uniform(0, 20), ' ');
      for (char& c : msg) c = alphabet[rng.uniform(0, alphabet.size() - 1)];
      if (decrypt_message(dec, encrypt_message(enc, msg, rng)) != msg) ++failures;
    }
  }
  if (failures != 0) o.fail(std::to_string(failures) + " failures");
  if (o.pass) o.detail = "2000 trials on E_37(2,9) and E_41(6,15), 0 failures";
  return o;
}

Outcome cli_end_to_end() {
  Outcome o;
  ecff::testing::ScratchDir dir;
  auto f = [&](const char* name) { return dir.file(name); };
  auto run = [&](std::vector<std::string> args) {
    args.insert(args.begin(), ECFF_CLI_PATH);
    const auto r = ecff::testing::run_process(args);
    if (r.exit_code != 0) o.fail(args[1] + " exit " + std::to_string(r.exit_code) + ": " + r.err);
    return r.out;
  };

  run({"curve", "init", "--p", "37", "--a", "2", "--b", "9", "--base", "9,4", "--generator",
       "5,25", "--out", f("curve.ecff")});
  const std::string alice = run({"keygen", "--curve", f("curve.ecff"), "--alpha", "5", "--point",
                                 "10,20", "--id", "alice", "--out-private", f("alice.ecff"),
                                 "--out-public", f("alice.pub.ecff")});
  const std::string bob = run({"keygen", "--curve", f("curve.ecff"), "--alpha", "7", "--point",
                               "11,20", "--id", "bob", "--out-private", f("bob.ecff"),
                               "--out-public", f("bob.pub.ecff")});
  const std::string ab = run({"derive-specific", "--private", f("alice.ecff"), "--peer-public",
                              f("bob.pub.ecff"), "--out", f("alice_for_bob.ecff")});
  const std::string ba = run({"derive-specific", "--private", f("bob.ecff"), "--peer-public",
                              f("alice.pub.ecff"), "--out", f("bob_for_alice.ecff")});
  if (alice != "pub1 = (1,7)\npub2 = (33,23)\n") o.fail("alice keys: " + alice);
  if (bob != "pub1 = (11,17)\npub2 = (23,30)\n") o.fail("bob keys: " + bob);
  if (ab != "specific = (15,11)\n") o.fail("A_B: " + ab);
  if (ba != "specific = (2,13)\n") o.fail("B_A: " + ba);

  const std::string cipher =
      run({"encrypt", "--private", f("bob.ecff"), "--peer-public", f("alice.pub.ecff"),
           "--peer-specific", f("alice_for_bob.ecff"), "--message", "attack", "--gammas",
           "8,12,19,2,3,23"});
  const std::string want_cipher = std::string(ecff::testing::kPaperCiphertext) + "\n";
  if (cipher != want_cipher) o.fail("encrypt printed " + cipher.substr(0, cipher.size() - 1));

  const std::string plain =
      run({"decrypt", "--private", f("alice.ecff"), "--peer-public", f("bob.pub.ecff"),
           "--peer-specific", f("bob_for_alice.ecff"), "--cipher",
           std::string(ecff::testing::kPaperCiphertext)});
  if (plain != "attack\n") o.fail("decrypt printed " + plain.substr(0, plain.size() - 1));
  if (o.pass) o.detail = "keys, b5cl#jvbbp@f, attack";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "point-set reproduction", point_set_reproduction},
      {2, "key-vector reproduction", key_vectors},
      {3, "encryption-vector reproduction", encryption_vectors},
      {4, "decryption-vector reproduction", decryption_vectors},
      {5, "correctness identity", correctness_identity},
      {6, "group-law suite", group_laws},
      {7, "oracle equivalence", oracle_equivalence},
      {8, "code-table hypothesis", code_table_hypothesis},
      {9, "round-trip property", round_trip},
      {10, "CLI end-to-end", cli_end_to_end},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2d %-32s %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
