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

#include "ecff/rng.hpp"

namespace ecff {

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
  return dist(*this);
}

Rng::result_type SystemRng::next() {
  // random_device yields 32-bit words.
  const std::uint64_t hi = device_();
  const std::uint64_t lo = device_();
  return (hi << 32) | (lo & 0xffffffffULL);
}

}  // namespace ecff
