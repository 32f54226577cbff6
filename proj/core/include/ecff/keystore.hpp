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

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecff/keys.hpp"

namespace ecff {

// Flat `key = value` text files, one entry per line, in a fixed order:
//
//   format = ecff-v1
//   kind = <curve|private|public-general|public-specific>
//   p = 37
//   a = 2
//   b = 9
//   base.x = 9
//   base.y = 4
//   generator.x = 5
//   generator.y = 25
//   alphabet = *abc...
//   <kind-specific entries>
//
// Every kind carries the domain block so a single file is enough to
// validate its points. Points are written as `name.x`/`name.y` pairs, or
// `name = inf`. Serialization is canonical: parsing a canonical file and
// writing it back reproduces it byte for byte.
inline constexpr std::string_view kFormatTag = "ecff-v1";
inline constexpr std::string_view kKeyFileExtension = ".ecff";

enum class KeyFileKind { curve, private_key, public_general, public_specific };

std::string_view to_string(KeyFileKind kind) noexcept;

// Syntax-level view of a file, before any domain validation.
struct KeyFile {
  struct Entry {
    std::string key;
    std::string value;
    std::size_t line;
  };
  KeyFileKind kind;
  std::vector<Entry> entries;  // excludes the format and kind lines
};

// Checks the header, line syntax and duplicate keys. Throws KeyFileError.
KeyFile parse_key_file(std::string_view text);
KeyFileKind peek_kind(std::string_view text);

struct PrivateKeyFile {
  Domain domain;
  PrivateKey key;
};

struct GeneralPublicKeyFile {
  Domain domain;
  GeneralPublicKey key;
};

struct SpecificPublicKeyFile {
  Domain domain;
  SpecificPublicKey key;
};

std::string serialize(const Domain& domain);
// Also writes the general public key so loaders can cross-check it.
std::string serialize(const Domain& domain, const PrivateKey& key);
std::string serialize(const Domain& domain, const GeneralPublicKey& key);
std::string serialize(const Domain& domain, const SpecificPublicKey& key);

// Each loader validates every point against the curve and every scalar
// against [1, n-1]; failures throw KeyFileError carrying the line number.
Domain load_domain(std::string_view text);
PrivateKeyFile load_private(std::string_view text);
GeneralPublicKeyFile load_general(std::string_view text);
SpecificPublicKeyFile load_specific(std::string_view text);

// Throws Error when the file cannot be read or written.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ecff
