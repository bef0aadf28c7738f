// Copyright 2026 The vtl Authors
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

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vtl {

/// E: TL idempotent, V: virtual crossing, Rho: ρ = a + bE + cv (the image
/// of a classical crossing), RhoInv: its inverse.
enum class GeneratorKind { E, V, Rho, RhoInv };

struct GeneratorSymbol {
  GeneratorKind kind = GeneratorKind::E;
  int index = 1;

  std::string to_string() const;

  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

inline GeneratorSymbol E(int i) { return {GeneratorKind::E, i}; }
inline GeneratorSymbol V(int i) { return {GeneratorKind::V, i}; }
inline GeneratorSymbol Rho(int i) { return {GeneratorKind::Rho, i}; }
inline GeneratorSymbol RhoInv(int i) { return {GeneratorKind::RhoInv, i}; }

/// Ordered product of generators on n strands; empty means the identity.
struct GeneratorWord {
  int n = 1;
  std::vector<GeneratorSymbol> symbols;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& what, std::size_t offset, std::size_t token)
      : std::invalid_argument(what), offset_(offset), token_(token) {}

  /// Byte offset of the offending token in the input.
  std::size_t offset() const { return offset_; }
  /// 1-based token number.
  std::size_t token() const { return token_; }

 private:
  std::size_t offset_;
  std::size_t token_;
};

/// Whitespace separated tokens e<k>, v<k>, r<k>, r<k>^-1 with 1 <= k <= n-1.
GeneratorWord parse_word(std::string_view text, int n);
std::string render_word(const GeneratorWord& word);

}  // namespace vtl
