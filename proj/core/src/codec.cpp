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

#include "ecff/codec.hpp"

#include <utility>

#include "ecff/errors.hpp"

namespace ecff {

std::string SymbolNotInAlphabet::describe(char symbol, std::size_t position) {
  std::string what = "symbol '";
  what += symbol;
  what += "' is not in the alphabet";
  if (position != npos) what += " (position " + std::to_string(position) + ")";
  return what;
}

void validate_alphabet(std::string_view alphabet) {
  if (alphabet.empty()) throw InvalidAlphabet("alphabet is empty");
  std::array<bool, 256> seen{};
  for (char c : alphabet) {
    const auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u >= 0x7f) {
      throw InvalidAlphabet("alphabet symbols must be printable ASCII without space");
    }
    if (seen[u]) throw InvalidAlphabet(std::string("repeated alphabet symbol '") + c + "'");
    seen[u] = true;
  }
}

CodeTable::CodeTable(Point generator, std::string alphabet, std::vector<Point> points)
    : generator_(std::move(generator)), alphabet_(std::move(alphabet)), points_(std::move(points)) {
  index_of_symbol_.fill(kAbsent);
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    index_of_symbol_[static_cast<unsigned char>(alphabet_[i])] = static_cast<int>(i);
    symbol_of_point_.emplace(points_[i], alphabet_[i]);
  }
}

CodeTable CodeTable::from_generator(const Point& generator, std::string_view alphabet) {
  validate_alphabet(alphabet);
  std::vector<Point> points;
  points.reserve(alphabet.size());
  Point current = generator.curve().infinity();
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    // A repeat of infinity before the table is full means ord(G) <= i.
    if (i > 0 && current.is_infinity()) {
      throw TableTooLarge("generator " + to_string(generator) + " has order " +
                          std::to_string(i) + ", fewer than " + std::to_string(alphabet.size()) +
                          " symbols");
    }
    points.push_back(current);
    current = current + generator;
  }
  return CodeTable(generator, std::string(alphabet), std::move(points));
}

bool CodeTable::has_symbol(char s) const noexcept {
  return index_of_symbol_[static_cast<unsigned char>(s)] != kAbsent;
}

const Point& CodeTable::encode_symbol(char s) const {
  const int i = index_of_symbol_[static_cast<unsigned char>(s)];
  if (i == kAbsent) throw SymbolNotInAlphabet(s);
  return points_[static_cast<std::size_t>(i)];
}

char CodeTable::decode_point(const Point& pt) const {
  const auto it = symbol_of_point_.find(pt);
  if (it == symbol_of_point_.end() || !(pt.curve() == curve())) {
    throw PointNotInTable("point " + to_string(pt) + " is not in the code table");
  }
  return it->second;
}

std::vector<Point> CodeTable::encode_message(std::string_view msg) const {
  std::vector<Point> out;
  out.reserve(msg.size());
  for (std::size_t i = 0; i < msg.size(); ++i) {
    const int idx = index_of_symbol_[static_cast<unsigned char>(msg[i])];
    if (idx == kAbsent) throw SymbolNotInAlphabet(msg[i], i);
    out.push_back(points_[static_cast<std::size_t>(idx)]);
  }
  return out;
}

std::string CodeTable::decode_message(const std::vector<Point>& points) const {
  std::string out;
  out.reserve(points.size());
  for (const Point& pt : points) out.push_back(decode_point(pt));
  return out;
}

}  // namespace ecff
