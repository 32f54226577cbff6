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

#include "ecff/oracle.hpp"

#include <unordered_map>

namespace ecff::reference {

Point slow_scalar_mul(std::uint64_t k, const Point& pt) {
  Point acc = pt.curve().infinity();
  for (std::uint64_t i = 0; i < k; ++i) acc = point_add(acc, pt);
  return acc;
}

std::vector<Point> brute_force_points(const Curve& curve) {
  const std::uint64_t p = curve.p().value();
  std::vector<Point> out{curve.infinity()};
  for (std::uint64_t x = 0; x < p; ++x) {
    for (std::uint64_t y = 0; y < p; ++y) {
      if (curve.contains(x, y)) out.push_back(curve.point(x, y));
    }
  }
  return out;
}

std::uint64_t slow_point_order(const Point& pt) {
  std::uint64_t m = 1;
  for (Point acc = pt; !acc.is_infinity(); acc = point_add(acc, pt)) ++m;
  return m;
}

std::optional<FieldElement> brute_force_inverse(const FieldElement& a) {
  const Prime p = a.modulus();
  for (std::uint64_t r = 1; r < p.value(); ++r) {
    const FieldElement cand(r, p);
    if ((a * cand).residue() == 1) return cand;
  }
  return std::nullopt;
}

std::vector<FieldElement> brute_force_sqrt(const FieldElement& a) {
  const Prime p = a.modulus();
  std::vector<FieldElement> roots;
  for (std::uint64_t r = 0; r < p.value(); ++r) {
    const FieldElement cand(r, p);
    if (cand * cand == a) roots.push_back(cand);
  }
  return roots;
}

int brute_force_legendre(const FieldElement& a) {
  if (a.is_zero()) return 0;
  return brute_force_sqrt(a).empty() ? -1 : 1;
}

std::optional<std::uint64_t> ecdlp_exhaustive(const Point& generator, const Point& target,
                                              std::uint64_t n) {
  Point acc = generator.curve().infinity();
  for (std::uint64_t k = 0; k < n; ++k) {
    if (acc == target) return k;
    acc = point_add(acc, generator);
  }
  return std::nullopt;
}

std::optional<std::uint64_t> ecdlp_bsgs(const Point& generator, const Point& target,
                                        std::uint64_t n) {
  if (n == 0) return std::nullopt;
  std::uint64_t m = 1;
  while (m * m < n) ++m;

  // Baby steps: j*G for 0 <= j < m. j < m <= n keeps these distinct.
  std::unordered_map<Point, std::uint64_t, PointHash> baby;
  baby.reserve(m);
  Point acc = generator.curve().infinity();
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(acc, j);
    acc = point_add(acc, generator);
  }

  // Giant steps: Q - i*m*G.
  const Point stride = negate(acc);  // acc == m*G here
  Point giant = target;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (const auto it = baby.find(giant); it != baby.end()) {
      const std::uint64_t k = i * m + it->second;
      if (k < n) return k;
    }
    giant = point_add(giant, stride);
  }
  return std::nullopt;
}

}  // namespace ecff::reference
