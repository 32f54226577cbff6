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
#include <limits>
#include <random>

namespace ecff {

// Source of uniform 64-bit words. Satisfies UniformRandomBitGenerator so it
// plugs into <random> distributions. Not thread-safe; each caller owns one.
class Rng {
 public:
  using result_type = std::uint64_t;

  virtual ~Rng() = default;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next(); }

  // Uniform in [lo, hi]; requires lo <= hi.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 protected:
  virtual result_type next() = 0;
};

// Reproducible stream for tests and --seed.
class SeededRng final : public Rng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

 protected:
  result_type next() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Operating-system entropy.
class SystemRng final : public Rng {
 protected:
  result_type next() override;

 private:
  std::random_device device_;
};

}  // namespace ecff
