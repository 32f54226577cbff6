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

#include "ecff/ecgroup.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "ecff/errors.hpp"

namespace ecff {

namespace {

std::uint64_t isqrt(std::uint64_t n) noexcept {
  if (n < 2) return n;
  // Newton iteration from a power of two above the root.
  std::uint64_t x = std::uint64_t{1} << ((std::bit_width(n) + 1) / 2);
  while (true) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

void require_same_curve(const Point& lhs, const Point& rhs) {
  if (!(lhs.curve() == rhs.curve())) {
    throw CurveMismatch("points belong to different curves");
  }
}

}  // namespace

Curve::Curve(Prime p, FieldElement a, FieldElement b) {
  if (a.modulus() != p || b.modulus() != p) {
    throw ModulusMismatch("curve coefficients must be reduced mod p");
  }
  const FieldElement disc = FieldElement(4, p) * a * a * a + FieldElement(27, p) * b * b;
  if (disc.is_zero()) {
    throw SingularCurve("singular curve: 4a^3 + 27b^2 = 0 (mod " + std::to_string(p.value()) +
                        ")");
  }
  auto state = std::make_shared<State>(p, a, b);
  state_ = std::move(state);
}

Curve::Curve(std::uint64_t p, std::uint64_t a, std::uint64_t b)
    : Curve(Prime(p), FieldElement(a, Prime(p)), FieldElement(b, Prime(p))) {}

std::optional<std::uint64_t> Curve::order() const noexcept {
  const std::uint64_t n = state_->order.load(std::memory_order_acquire);
  if (n == 0) return std::nullopt;
  return n;
}

void Curve::set_order(std::uint64_t order) const {
  if (!hasse_interval(p()).contains(order)) {
    throw std::invalid_argument("group order " + std::to_string(order) +
                                " violates the Hasse bound");
  }
  std::uint64_t expected = 0;
  if (!state_->order.compare_exchange_strong(expected, order, std::memory_order_acq_rel) &&
      expected != order) {
    throw std::invalid_argument("group order " + std::to_string(order) +
                                " contradicts cached order " + std::to_string(expected));
  }
}

FieldElement Curve::rhs(const FieldElement& x) const { return (x * x + a()) * x + b(); }

bool Curve::contains(const Point& pt) const noexcept {
  if (!(pt.curve() == *this)) return false;
  if (pt.is_infinity()) return true;
  return pt.y() * pt.y() == rhs(pt.x());
}

bool Curve::contains(std::uint64_t x, std::uint64_t y) const noexcept {
  if (x >= p().value() || y >= p().value()) return false;
  const FieldElement fy = element(y);
  return fy * fy == rhs(element(x));
}

Point Curve::infinity() const { return Point(*this); }

Point Curve::point(std::uint64_t x, std::uint64_t y) const {
  if (!contains(x, y)) {
    throw PointNotOnCurve("(" + std::to_string(x) + "," + std::to_string(y) +
                          ") is not on the curve");
  }
  return Point(*this, element(x), element(y));
}

Point Curve::point(const FieldElement& x, const FieldElement& y) const {
  if (x.modulus() != p() || y.modulus() != p()) {
    throw ModulusMismatch("coordinates must be reduced mod p");
  }
  return point(x.residue(), y.residue());
}

bool operator==(const Curve& lhs, const Curve& rhs) noexcept {
  if (lhs.state_ == rhs.state_) return true;
  return lhs.p() == rhs.p() && lhs.a() == rhs.a() && lhs.b() == rhs.b();
}

std::ostream& operator<<(std::ostream& os, const Curve& c) {
  return os << "E_" << c.p().value() << "(" << c.a().residue() << "," << c.b().residue() << ")";
}

const FieldElement& Point::x() const {
  if (!affine_) throw std::logic_error("point at infinity has no coordinates");
  return affine_->x;
}

const FieldElement& Point::y() const {
  if (!affine_) throw std::logic_error("point at infinity has no coordinates");
  return affine_->y;
}

bool operator==(const Point& lhs, const Point& rhs) noexcept {
  if (!(lhs.curve_ == rhs.curve_)) return false;
  if (lhs.is_infinity() || rhs.is_infinity()) return lhs.is_infinity() == rhs.is_infinity();
  return lhs.affine_->x == rhs.affine_->x && lhs.affine_->y == rhs.affine_->y;
}

std::size_t PointHash::operator()(const Point& pt) const noexcept {
  if (pt.is_infinity()) return 0x9e3779b97f4a7c15ULL;
  const std::size_t hx = std::hash<std::uint64_t>{}(pt.x().residue());
  const std::size_t hy = std::hash<std::uint64_t>{}(pt.y().residue());
  return hx ^ (hy + 0x9e3779b97f4a7c15ULL + (hx << 6) + (hx >> 2));
}

std::string to_string(const Point& pt) {
  if (pt.is_infinity()) return "inf";
  return "(" + std::to_string(pt.x().residue()) + "," + std::to_string(pt.y().residue()) + ")";
}

std::ostream& operator<<(std::ostream& os, const Point& pt) { return os << to_string(pt); }

std::optional<Point> parse_point(const Curve& curve, std::string_view text) {
  if (text == "inf") return curve.infinity();
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;

  auto parse_coord = [](std::string_view s) -> std::optional<std::uint64_t> {
    if (s.empty()) return std::nullopt;
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
  };
  const auto x = parse_coord(text.substr(0, comma));
  const auto y = parse_coord(text.substr(comma + 1));
  if (!x || !y) return std::nullopt;
  return curve.point(*x, *y);
}

Point negate(const Point& pt) {
  if (pt.is_infinity()) return pt;
  return pt.curve().point(pt.x(), -pt.y());
}

Point point_add(const Point& lhs, const Point& rhs) {
  require_same_curve(lhs, rhs);
  if (lhs.is_infinity()) return rhs;
  if (rhs.is_infinity()) return lhs;

  const Curve& curve = lhs.curve();
  const FieldElement& x1 = lhs.x();
  const FieldElement& y1 = lhs.y();
  const FieldElement& x2 = rhs.x();
  const FieldElement& y2 = rhs.y();

  FieldElement slope = FieldElement::zero(curve.p());
  if (x1 == x2) {
    // Vertical chord, or tangent at a point with y = 0.
    if (y1 != y2 || y1.is_zero()) return curve.infinity();
    slope = (curve.element(3) * x1 * x1 + curve.a()) * inv(y1 + y1);
  } else {
    slope = (y2 - y1) * inv(x2 - x1);
  }
  const FieldElement x3 = slope * slope - x1 - x2;
  const FieldElement y3 = slope * (x1 - x3) - y1;
  return curve.point(x3, y3);
}

Point point_sub(const Point& lhs, const Point& rhs) { return point_add(lhs, negate(rhs)); }

Point scalar_mul(std::uint64_t k, const Point& pt) {
  if (const auto n = pt.curve().order()) k %= *n;
  Point result = pt.curve().infinity();
  // Left-to-right over the bits of k.
  for (int bit = std::bit_width(k) - 1; bit >= 0; --bit) {
    result = point_add(result, result);
    if ((k >> bit) & 1) result = point_add(result, pt);
  }
  return result;
}

std::vector<Point> enumerate_points(const Curve& curve) {
  const std::uint64_t p = curve.p().value();
  if (p > kMaxEnumerablePrime) {
    throw EnumerationTooLarge("refusing to enumerate a curve with p = " + std::to_string(p) +
                              " > 2^20");
  }
  std::vector<Point> points;
  points.push_back(curve.infinity());
  for (std::uint64_t x = 0; x < p; ++x) {
    const FieldElement fx = curve.element(x);
    const auto roots = sqrt(curve.rhs(fx));
    if (!roots) continue;
    points.push_back(curve.point(fx, roots->first));
    if (!roots->single()) points.push_back(curve.point(fx, roots->second));
  }
  curve.set_order(points.size());
  return points;
}

std::uint64_t group_order(const Curve& curve) {
  if (const auto n = curve.order()) return *n;
  return enumerate_points(curve).size();
}

std::uint64_t point_order(const Curve& curve, const Point& pt) {
  if (!(pt.curve() == curve)) throw CurveMismatch("point belongs to a different curve");
  const auto n = curve.order();
  if (!n) {
    throw OrderUnknown("curve order unknown; enumerate the curve points first");
  }
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= *n; ++d) {
    if (*n % d != 0) continue;
    divisors.push_back(d);
    if (d != *n / d) divisors.push_back(*n / d);
  }
  std::sort(divisors.begin(), divisors.end());
  for (std::uint64_t d : divisors) {
    if (scalar_mul(d, pt).is_infinity()) return d;
  }
  // Unreachable when the cached order is correct (Lagrange).
  throw std::logic_error("cached group order does not annihilate point " + to_string(pt));
}

HasseInterval hasse_interval(Prime p) noexcept {
  const std::uint64_t t = isqrt(4 * p.value());
  return {p.value() + 1 - t, p.value() + 1 + t};
}

}  // namespace ecff
