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

#include "ecff/keystore.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "ecff/errors.hpp"

namespace ecff {

namespace {

constexpr std::string_view kSeparator = " = ";

bool is_key_char(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '.' || c == '_';
}

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

std::optional<KeyFileKind> kind_from_string(std::string_view s) noexcept {
  if (s == "curve") return KeyFileKind::curve;
  if (s == "private") return KeyFileKind::private_key;
  if (s == "public-general") return KeyFileKind::public_general;
  if (s == "public-specific") return KeyFileKind::public_specific;
  return std::nullopt;
}

// Consumes the entries of one KeyFile by name and reports anything left
// over or missing.
class FieldReader {
 public:
  explicit FieldReader(const KeyFile& file) : end_line_(2) {
    for (const auto& e : file.entries) {
      fields_.emplace(e.key, &e);
      end_line_ = std::max(end_line_, e.line);
    }
  }

  const KeyFile::Entry& entry(const std::string& key) {
    const auto it = fields_.find(key);
    if (it == fields_.end()) throw KeyFileError(end_line_ + 1, "missing field '" + key + "'");
    used_.insert(key);
    return *it->second;
  }

  bool has(const std::string& key) const { return fields_.contains(key); }

  std::pair<std::uint64_t, std::size_t> integer(const std::string& key) {
    const auto& e = entry(key);
    const std::string& v = e.value;
    if (v.empty() || (v.size() > 1 && v[0] == '0')) {
      throw KeyFileError(e.line, "'" + key + "' must be a decimal integer without leading zeros");
    }
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
      throw KeyFileError(e.line, "'" + key + "' must be a decimal integer");
    }
    return {out, e.line};
  }

  std::pair<std::string, std::size_t> identifier(const std::string& key) {
    const auto& e = entry(key);
    if (!is_identifier(e.value)) {
      throw KeyFileError(e.line, "'" + key + "' must match [A-Za-z0-9_.-]+");
    }
    return {e.value, e.line};
  }

  std::pair<Point, std::size_t> point(const Curve& curve, const std::string& name) {
    if (has(name)) {
      const auto& e = entry(name);
      if (e.value != "inf") throw KeyFileError(e.line, "'" + name + "' must be inf");
      if (has(name + ".x") || has(name + ".y")) {
        throw KeyFileError(e.line, "'" + name + "' given both as inf and as coordinates");
      }
      return {curve.infinity(), e.line};
    }
    const auto [x, line] = integer(name + ".x");
    const auto [y, line_y] = integer(name + ".y");
    if (x >= curve.p().value() || y >= curve.p().value()) {
      throw KeyFileError(line, "'" + name + "' coordinates must be below p");
    }
    if (!curve.contains(x, y)) {
      throw KeyFileError(line, "'" + name + "' (" + std::to_string(x) + "," +
                                   std::to_string(y) + ") is not on the curve");
    }
    return {curve.point(x, y), line};
  }

  void finish() const {
    for (const auto& [key, e] : fields_) {
      if (!used_.contains(key)) throw KeyFileError(e->line, "unknown field '" + key + "'");
    }
  }

 private:
  std::map<std::string, const KeyFile::Entry*> fields_;
  std::set<std::string> used_;
  std::size_t end_line_;
};

Domain read_domain(FieldReader& in) {
  const auto [p_value, p_line] = in.integer("p");
  std::optional<Prime> p;
  try {
    p.emplace(p_value);
  } catch (const Error& e) {
    throw KeyFileError(p_line, e.what());
  }
  const auto [a, a_line] = in.integer("a");
  const auto [b, b_line] = in.integer("b");
  if (a >= p->value()) throw KeyFileError(a_line, "'a' must be below p");
  if (b >= p->value()) throw KeyFileError(b_line, "'b' must be below p");
  std::optional<Curve> curve;
  try {
    curve.emplace(*p, FieldElement(a, *p), FieldElement(b, *p));
  } catch (const SingularCurve& e) {
    throw KeyFileError(a_line, e.what());
  }
  const auto [base, base_line] = in.point(*curve, "base");
  const auto [generator, gen_line] = in.point(*curve, "generator");
  const auto& alphabet = in.entry("alphabet");
  try {
    group_order(*curve);
  } catch (const EnumerationTooLarge& e) {
    throw KeyFileError(p_line, e.what());
  }
  try {
    validate_alphabet(alphabet.value);
  } catch (const InvalidAlphabet& e) {
    throw KeyFileError(alphabet.line, e.what());
  }
  try {
    return Domain(base, generator, alphabet.value);
  } catch (const InvalidKey& e) {
    throw KeyFileError(base_line, e.what());
  } catch (const TableTooLarge& e) {
    throw KeyFileError(gen_line, e.what());
  }
}

void require_kind(const KeyFile& file, KeyFileKind want) {
  if (file.kind != want) {
    throw KeyFileError(2, "expected kind '" + std::string(to_string(want)) + "', found '" +
                              std::string(to_string(file.kind)) + "'");
  }
}

class Writer {
 public:
  explicit Writer(KeyFileKind kind) {
    line("format", kFormatTag);
    line("kind", to_string(kind));
  }

  void line(std::string_view key, std::string_view value) {
    out_ << key << kSeparator << value << '\n';
  }
  void integer(std::string_view key, std::uint64_t v) { line(key, std::to_string(v)); }
  void point(std::string_view name, const Point& pt) {
    if (pt.is_infinity()) {
      line(name, "inf");
      return;
    }
    integer(std::string(name) + ".x", pt.x().residue());
    integer(std::string(name) + ".y", pt.y().residue());
  }
  void domain(const Domain& d) {
    integer("p", d.curve().p().value());
    integer("a", d.curve().a().residue());
    integer("b", d.curve().b().residue());
    point("base", d.base());
    point("generator", d.table().generator());
    line("alphabet", d.table().alphabet());
  }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

}  // namespace

std::string_view to_string(KeyFileKind kind) noexcept {
  switch (kind) {
    case KeyFileKind::curve:
      return "curve";
    case KeyFileKind::private_key:
      return "private";
    case KeyFileKind::public_general:
      return "public-general";
    case KeyFileKind::public_specific:
      return "public-specific";
  }
  return "unknown";
}

KeyFile parse_key_file(std::string_view text) {
  std::vector<KeyFile::Entry> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;

    const std::size_t sep = raw.find(kSeparator);
    if (sep == std::string_view::npos) {
      throw KeyFileError(line_no, "expected 'key = value'");
    }
    const std::string_view key = raw.substr(0, sep);
    const std::string_view value = raw.substr(sep + kSeparator.size());
    if (key.empty() || !std::all_of(key.begin(), key.end(), is_key_char)) {
      throw KeyFileError(line_no, "malformed key '" + std::string(key) + "'");
    }
    if (value.empty() || value.front() == ' ' || value.back() == ' ') {
      throw KeyFileError(line_no, "malformed value for '" + std::string(key) + "'");
    }
    lines.push_back({std::string(key), std::string(value), line_no});
  }

  if (lines.empty() || lines[0].key != "format") {
    throw KeyFileError(1, "missing 'format' header");
  }
  if (lines[0].value != kFormatTag) {
    throw KeyFileError(1, "unknown format tag '" + lines[0].value + "'");
  }
  if (lines.size() < 2 || lines[1].key != "kind") throw KeyFileError(2, "missing 'kind' header");
  const auto kind = kind_from_string(lines[1].value);
  if (!kind) throw KeyFileError(2, "unknown kind '" + lines[1].value + "'");

  KeyFile file{*kind, {}};
  std::set<std::string> seen{"format", "kind"};
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (!seen.insert(lines[i].key).second) {
      throw KeyFileError(lines[i].line, "duplicate field '" + lines[i].key + "'");
    }
    file.entries.push_back(std::move(lines[i]));
  }
  return file;
}

KeyFileKind peek_kind(std::string_view text) { return parse_key_file(text).kind; }

std::string serialize(const Domain& domain) {
  Writer w(KeyFileKind::curve);
  w.domain(domain);
  return w.str();
}

std::string serialize(const Domain& domain, const PrivateKey& key) {
  Writer w(KeyFileKind::private_key);
  w.domain(domain);
  w.line("id", key.owner());
  w.integer("alpha", key.scalar());
  w.point("point", key.point());
  const GeneralPublicKey pub = key.public_key();
  w.point("pub1", pub.k1);
  w.point("pub2", pub.k2);
  return w.str();
}

std::string serialize(const Domain& domain, const GeneralPublicKey& key) {
  Writer w(KeyFileKind::public_general);
  w.domain(domain);
  w.line("id", key.owner);
  w.point("pub1", key.k1);
  w.point("pub2", key.k2);
  return w.str();
}

std::string serialize(const Domain& domain, const SpecificPublicKey& key) {
  Writer w(KeyFileKind::public_specific);
  w.domain(domain);
  w.line("issuer", key.issuer);
  w.line("audience", key.audience);
  w.point("specific", key.point);
  return w.str();
}

Domain load_domain(std::string_view text) {
  const KeyFile file = parse_key_file(text);
  require_kind(file, KeyFileKind::curve);
  FieldReader in(file);
  Domain domain = read_domain(in);
  in.finish();
  return domain;
}

PrivateKeyFile load_private(std::string_view text) {
  const KeyFile file = parse_key_file(text);
  require_kind(file, KeyFileKind::private_key);
  FieldReader in(file);
  Domain domain = read_domain(in);
  const auto [id, id_line] = in.identifier("id");
  const auto [alpha, alpha_line] = in.integer("alpha");
  const auto [point, point_line] = in.point(domain.curve(), "point");
  const auto [pub1, pub1_line] = in.point(domain.curve(), "pub1");
  const auto [pub2, pub2_line] = in.point(domain.curve(), "pub2");
  in.finish();

  std::optional<PrivateKey> key;
  try {
    key.emplace(domain, alpha, point, id);
  } catch (const ScalarOutOfRange& e) {
    throw KeyFileError(alpha_line, e.what());
  } catch (const InvalidKey& e) {
    throw KeyFileError(point_line, e.what());
  }
  const GeneralPublicKey expected = key->public_key();
  if (!(expected.k1 == pub1)) {
    throw KeyFileError(pub1_line, "stored pub1 does not match alpha and point");
  }
  if (!(expected.k2 == pub2)) {
    throw KeyFileError(pub2_line, "stored pub2 does not match alpha and point");
  }
  return {std::move(domain), std::move(*key)};
}

GeneralPublicKeyFile load_general(std::string_view text) {
  const KeyFile file = parse_key_file(text);
  require_kind(file, KeyFileKind::public_general);
  FieldReader in(file);
  Domain domain = read_domain(in);
  auto [id, id_line] = in.identifier("id");
  auto [pub1, pub1_line] = in.point(domain.curve(), "pub1");
  auto [pub2, pub2_line] = in.point(domain.curve(), "pub2");
  in.finish();
  return {std::move(domain), GeneralPublicKey{std::move(pub1), std::move(pub2), std::move(id)}};
}

SpecificPublicKeyFile load_specific(std::string_view text) {
  const KeyFile file = parse_key_file(text);
  require_kind(file, KeyFileKind::public_specific);
  FieldReader in(file);
  Domain domain = read_domain(in);
  auto [issuer, issuer_line] = in.identifier("issuer");
  auto [audience, audience_line] = in.identifier("audience");
  auto [point, point_line] = in.point(domain.curve(), "specific");
  in.finish();
  return {std::move(domain),
          SpecificPublicKey{std::move(point), std::move(issuer), std::move(audience)}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw Error("failed writing " + path.string());
}

}  // namespace ecff
