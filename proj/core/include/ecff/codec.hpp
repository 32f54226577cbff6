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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ecff/ecgroup.hpp"

namespace ecff {

// 43 symbols: '*', a-z, digits 1-9 then 0, then #@!&$%.
inline constexpr std::string_view kCanonicalAlphabet =
    "*abcdefghijklmnopqrstuvwxyz1234567890#@!&$%";

// Bijection between a symbol alphabet and points of one curve. Symbol i
// maps to i * G for a generator G, so symbol 0 maps to infinity.
class CodeTable {
 public:
  // Throws InvalidAlphabet for an empty alphabet, repeated symbols or
  // symbols outside printable ASCII (space excluded), and TableTooLarge when
  // G has fewer multiples than there are symbols.
  static CodeTable from_generator(const Point& generator, std::string_view alphabet);

  const Curve& curve() const noexcept { return generator_.curve(); }
  const Point& generator() const noexcept { return generator_; }
  const std::string& alphabet() const noexcept { return alphabet_; }
  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return alphabet_.size(); }

  bool has_symbol(char s) const noexcept;

  // Throws SymbolNotInAlphabet.
  const Point& encode_symbol(char s) const;
  // Throws PointNotInTable.
  char decode_point(const Point& pt) const;

  // Element-wise; the first offending character is reported with its
  // position.
  std::vector<Point> encode_message(std::string_view msg) const;
  std::string decode_message(const std::vector<Point>& points) const;

 private:
  CodeTable(Point generator, std::string alphabet, std::vector<Point> points);

  static constexpr int kAbsent = -1;

  Point generator_;
  std::string alphabet_;
  std::vector<Point> points_;
  std::array<int, 256> index_of_symbol_;
  std::unordered_map<Point, char, PointHash> symbol_of_point_;
};

// Throws InvalidAlphabet when `alphabet` is not usable for a CodeTable.
void validate_alphabet(std::string_view alphabet);

}  // namespace ecff
