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
#include <optional>
#include <vector>

#include "ecff/ecgroup.hpp"
#include "ecff/modfield.hpp"

// Brute-force reference implementations. They exist to cross-check the
// fast paths and to demonstrate that discrete logarithms fall at toy sizes;
// none of this is suitable for real keys.
namespace ecff::reference {

// P + P + ... + P, k times. Linear in k and ignores any cached order.
Point slow_scalar_mul(std::uint64_t k, const Point& pt);

// Every (x, y) in [0, p)^2 tested against the curve equation, infinity
// first. Quadratic in p; does not touch the order cache.
std::vector<Point> brute_force_points(const Curve& curve);

// Smallest m > 0 with m*P = infinity, by repeated addition.
std::uint64_t slow_point_order(const Point& pt);

// Search over all residues.
std::optional<FieldElement> brute_force_inverse(const FieldElement& a);
std::vector<FieldElement> brute_force_sqrt(const FieldElement& a);
int brute_force_legendre(const FieldElement& a);

// Smallest k in [0, n) with k*G = Q, or nullopt if Q is not a multiple of
// G. `n` is the order of G.
std::optional<std::uint64_t> ecdlp_exhaustive(const Point& generator, const Point& target,
                                              std::uint64_t n);
// Baby-step giant-step with m = ceil(sqrt(n)) baby steps; O(sqrt n) group
// operations and memory.
std::optional<std::uint64_t> ecdlp_bsgs(const Point& generator, const Point& target,
                                        std::uint64_t n);

}  // namespace ecff::reference
