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

// Micro-benchmarks for the hot paths of the library.

#include <benchmark/benchmark.h>

#include <string>

#include "ecff/ecff.hpp"
#include "ecff/oracle.hpp"

namespace {

using namespace ecff;

Domain make_domain(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  const Curve c(p, a, b);
  const auto pts = enumerate_points(c);
  return Domain(pts.at(1), pts.at(2));
}

void BM_ScalarMul(benchmark::State& state) {
  const Domain d = make_domain(1013, 3, 5);
  std::uint64_t k = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scalar_mul(k, d.base()));
    k = (k * 7 + 3) % d.base_order();
  }
}
BENCHMARK(BM_ScalarMul);

void BM_EnumeratePoints(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    const Curve c(p, 2, 9);
    benchmark::DoNotOptimize(enumerate_points(c));
  }
}
BENCHMARK(BM_EnumeratePoints)->Arg(37)->Arg(1013)->Arg(65537);

void BM_EncryptMessage(benchmark::State& state) {
  // Symbol-encoded ciphertext needs a table covering the group: 43 points.
  const Domain d = make_domain(41, 6, 15);
  SeededRng rng(1);
  const KeyPair alice = keygen(d, rng, "alice");
  const KeyPair bob = keygen(d, rng, "bob");
  const EncryptionContext enc(d, bob.secret, alice.general,
                              derive_specific(alice.secret, bob.general));
  const std::string msg = "attackatdawn";
  for (auto _ : state) {
    benchmark::DoNotOptimize(encrypt_message(enc, msg, rng));
  }
}
BENCHMARK(BM_EncryptMessage);

void BM_DiscreteLogBsgs(benchmark::State& state) {
  const Domain d = make_domain(1013, 3, 5);
  const Point q = 517 * d.base();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::ecdlp_bsgs(d.base(), q, d.base_order()));
  }
}
BENCHMARK(BM_DiscreteLogBsgs);

}  // namespace

BENCHMARK_MAIN();
