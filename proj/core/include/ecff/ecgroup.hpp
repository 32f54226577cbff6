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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecff/modfield.hpp"

namespace ecff {

class Point;

// The group E_p(a, b) of solutions to y^2 = x^3 + ax + b over Z/pZ, plus
// the point at infinity. Copies share one order cache.
class Curve {
 public:
  // Throws SingularCurve when 4a^3 + 27b^2 == 0 (mod p) and ModulusMismatch
  // when a or b live in a different field.
  Curve(Prime p, FieldElement a, FieldElement b);
  // Convenience form; additionally throws NotPrime / ModulusOutOfRange.
  Curve(std::uint64_t p, std::uint64_t a, std::uint64_t b);

  Prime p() const noexcept { return state_->p; }
  const FieldElement& a() const noexcept { return state_->a; }
  const FieldElement& b() const noexcept { return state_->b; }
  FieldElement element(std::uint64_t v) const noexcept { return {v, p()}; }

  // Number of points including infinity, once known.
  std::optional<std::uint64_t> order() const noexcept;
  // Records the group order. The first write wins; later writes must agree.
  // Throws std::invalid_argument for a value outside the Hasse interval or
  // one that contradicts the cached order.
  void set_order(std::uint64_t order) const;

  // x^3 + ax + b
  FieldElement rhs(const FieldElement& x) const;

  bool contains(const Point& pt) const noexcept;
  bool contains(std::uint64_t x, std::uint64_t y) const noexcept;

  Point infinity() const;
  // Throws PointNotOnCurve.
  Point point(std::uint64_t x, std::uint64_t y) const;
  Point point(const FieldElement& x, const FieldElement& y) const;

  // Same (p, a, b); the order cache is not compared.
  friend bool operator==(const Curve& lhs, const Curve& rhs) noexcept;

 private:
  struct State {
    Prime p;
    FieldElement a;
    FieldElement b;
    mutable std::atomic<std::uint64_t> order{0};  // 0 = unknown
  };
  std::shared_ptr<const State> state_;
};

std::ostream& operator<<(std::ostream& os, const Curve& c);

// A point of one particular curve: either infinity or affine (x, y).
// Points can only be obtained through Curve or the group operations, so an
// existing Point always satisfies its curve equation.
class Point {
 public:
  const Curve& curve() const noexcept { return curve_; }
  bool is_infinity() const noexcept { return !affine_.has_value(); }

  // Precondition: !is_infinity(). Throws std::logic_error otherwise.
  const FieldElement& x() const;
  const FieldElement& y() const;

  friend bool operator==(const Point& lhs, const Point& rhs) noexcept;

 private:
  friend class Curve;
  struct Affine {
    FieldElement x;
    FieldElement y;
  };

  explicit Point(Curve curve) : curve_(std::move(curve)) {}
  Point(Curve curve, FieldElement x, FieldElement y)
      : curve_(std::move(curve)), affine_(Affine{x, y}) {}

  Curve curve_;
  std::optional<Affine> affine_;
};

struct PointHash {
  std::size_t operator()(const Point& pt) const noexcept;
};

// `(x,y)` in decimal, or `inf`.
std::string to_string(const Point& pt);
std::ostream& operator<<(std::ostream& os, const Point& pt);

// Parses `(x,y)`, `x,y` or `inf`. Returns nullopt for malformed text;
// throws PointNotOnCurve for a well-formed point that is not on `curve`.
std::optional<Point> parse_point(const Curve& curve, std::string_view text);

// (x, y) -> (x, -y); infinity is its own negative.
Point negate(const Point& pt);

// Chord-and-tangent addition. Throws CurveMismatch for points of different
// curves.
Point point_add(const Point& lhs, const Point& rhs);
Point point_sub(const Point& lhs, const Point& rhs);

// k-fold sum by double-and-add. When the curve order is cached, k is first
// reduced modulo it.
Point scalar_mul(std::uint64_t k, const Point& pt);

inline Point operator-(const Point& pt) { return negate(pt); }
inline Point operator+(const Point& lhs, const Point& rhs) { return point_add(lhs, rhs); }
inline Point operator-(const Point& lhs, const Point& rhs) { return point_sub(lhs, rhs); }
inline Point operator*(std::uint64_t k, const Point& pt) { return scalar_mul(k, pt); }

// Largest p for which enumerate_points will run.
inline constexpr std::uint64_t kMaxEnumerablePrime = std::uint64_t{1} << 20;

// Infinity first, then ascending x, and for each x the smaller root y
// before p - y. Caches the group order on `curve`. Throws
// EnumerationTooLarge for p > 2^20.
std::vector<Point> enumerate_points(const Curve& curve);

// Cached order if present, otherwise enumerates.
std::uint64_t group_order(const Curve& curve);

// Smallest m > 0 with m * pt == infinity. Requires the curve order to be
// cached (throws OrderUnknown otherwise) and throws CurveMismatch when pt
// belongs to another curve.
std::uint64_t point_order(const Curve& curve, const Point& pt);

// Closed interval [p + 1 - 2 sqrt(p), p + 1 + 2 sqrt(p)] rounded inward.
struct HasseInterval {
  std::uint64_t lo;
  std::uint64_t hi;
  bool contains(std::uint64_t n) const noexcept { return lo <= n && n <= hi; }
};
HasseInterval hasse_interval(Prime p) noexcept;

}  // namespace ecff
