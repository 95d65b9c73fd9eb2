// Copyright 2026 The Fluctuverse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fluctuverse {

enum class TokenKind {
  kNumber,
  kIdent,
  kUnit,  // bracketed unit expression; text holds the inside of [...]
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kCaret,
  kLParen,
  kRParen,
  kApprox,      // =
  kOrder,       // ~
  kUpperBound,  // <=
  kEnd,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  double number = 0.0;
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const Token& a, const Token& b) {
    return a.kind == b.kind && a.text == b.text && a.number == b.number;
  }
};

/// Splits source into tokens, dropping whitespace and `#` comments. The last
/// token is always kEnd. Throws Error(kLexError) with line/column.
std::vector<Token> tokenize(std::string_view source);

}  // namespace fluctuverse
