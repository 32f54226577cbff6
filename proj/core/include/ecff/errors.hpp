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
#include <stdexcept>
#include <string>

namespace ecff {

// Base of every error raised by the library. Callers that only need to
// distinguish "bad data" from programming errors can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// modfield
class NotPrime : public Error {
 public:
  using Error::Error;
};
class ModulusOutOfRange : public Error {
 public:
  using Error::Error;
};
class ModulusMismatch : public Error {
 public:
  using Error::Error;
};
class NonInvertible : public Error {
 public:
  using Error::Error;
};

// ecgroup
class SingularCurve : public Error {
 public:
  using Error::Error;
};
class PointNotOnCurve : public Error {
 public:
  using Error::Error;
};
class CurveMismatch : public Error {
 public:
  using Error::Error;
};
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};
class OrderUnknown : public Error {
 public:
  using Error::Error;
};

// codec
class TableTooLarge : public Error {
 public:
  using Error::Error;
};
class InvalidAlphabet : public Error {
 public:
  using Error::Error;
};
class PointNotInTable : public Error {
 public:
  using Error::Error;
};

class SymbolNotInAlphabet : public Error {
 public:
  SymbolNotInAlphabet(char symbol, std::size_t position)
      : Error(describe(symbol, position)), symbol_(symbol), position_(position) {}
  explicit SymbolNotInAlphabet(char symbol)
      : Error(describe(symbol, npos)), symbol_(symbol) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  char symbol() const noexcept { return symbol_; }
  // Index of the offending character in the input, or npos for a single
  // symbol lookup.
  std::size_t position() const noexcept { return position_; }

 private:
  static std::string describe(char symbol, std::size_t position);

  char symbol_;
  std::size_t position_ = npos;
};

// keys / cipher
class ScalarOutOfRange : public Error {
 public:
  using Error::Error;
};
class InvalidKey : public Error {
 public:
  using Error::Error;
};
class InvalidCiphertext : public Error {
 public:
  using Error::Error;
};
class MalformedCiphertext : public Error {
 public:
  using Error::Error;
};
class MessageTooLongForDistinctNonces : public Error {
 public:
  using Error::Error;
};
class DuplicateNonce : public Error {
 public:
  using Error::Error;
};
class NonceCountMismatch : public Error {
 public:
  using Error::Error;
};

// keystore
class KeyFileError : public Error {
 public:
  KeyFileError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ecff
