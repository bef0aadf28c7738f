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

#include "vtl/generator.hpp"

#include <cctype>
#include <charconv>

namespace vtl {

std::string GeneratorSymbol::to_string() const {
  switch (kind) {
    case GeneratorKind::E:
      return "e" + std::to_string(index);
    case GeneratorKind::V:
      return "v" + std::to_string(index);
    case GeneratorKind::Rho:
      return "r" + std::to_string(index);
    case GeneratorKind::RhoInv:
      return "r" + std::to_string(index) + "^-1";
  }
  return "?";
}

GeneratorWord parse_word(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("parse_word needs n >= 1");
  GeneratorWord word{n, {}};
  std::size_t pos = 0;
  std::size_t token_no = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view tok = text.substr(start, pos - start);
    ++token_no;
    auto fail = [&](const std::string& why) {
      throw WordParseError("token " + std::to_string(token_no) + " '" + std::string(tok) +
                               "' at offset " + std::to_string(start) + ": " + why,
                           start, token_no);
    };

    GeneratorKind kind = GeneratorKind::E;
    switch (tok.front()) {
      case 'e':
        kind = GeneratorKind::E;
        break;
      case 'v':
        kind = GeneratorKind::V;
        break;
      case 'r':
        kind = GeneratorKind::Rho;
        break;
      default:
        fail("expected e<k>, v<k>, r<k> or r<k>^-1");
    }
    std::string_view rest = tok.substr(1);
    if (kind == GeneratorKind::Rho && rest.size() > 3 && rest.substr(rest.size() - 3) == "^-1") {
      kind = GeneratorKind::RhoInv;
      rest.remove_suffix(3);
    }
    int index = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size()) {
      fail("malformed generator index");
    }
    if (index < 1 || index > n - 1) {
      fail("index out of range 1.." + std::to_string(n - 1));
    }
    word.symbols.push_back({kind, index});
  }
  return word;
}

std::string render_word(const GeneratorWord& word) {
  std::string out;
  for (const auto& s : word.symbols) {
    if (!out.empty()) out += ' ';
    out += s.to_string();
  }
  return out;
}

}  // namespace vtl
