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

#include "fluctuverse/lexer.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "fluctuverse/error.hpp"

namespace fluctuverse {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kNumber: return "number";
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kUnit: return "unit";
    case TokenKind::kPlus: return "'+'";
    case TokenKind::kMinus: return "'-'";
    case TokenKind::kStar: return "'*'";
    case TokenKind::kSlash: return "'/'";
    case TokenKind::kCaret: return "'^'";
    case TokenKind::kLParen: return "'('";
    case TokenKind::kRParen: return "')'";
    case TokenKind::kApprox: return "'='";
    case TokenKind::kOrder: return "'~'";
    case TokenKind::kUpperBound: return "'<='";
    case TokenKind::kEnd: return "end of input";
  }
  return "token";
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      Token tok;
      tok.line = line_;
      tok.column = column_;
      if (at_end()) {
        out.push_back(tok);
        return out;
      }
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
        number(tok);
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        tok.kind = TokenKind::kIdent;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
          tok.text += advance();
        }
      } else if (ch == '[') {
        advance();
        tok.kind = TokenKind::kUnit;
        while (!at_end() && peek() != ']') {
          if (peek() == '\n') fail("unterminated unit bracket");
          tok.text += advance();
        }
        if (at_end()) fail("unterminated unit bracket");
        advance();
      } else if (ch == '<') {
        advance();
        if (at_end() || peek() != '=') fail("expected '=' after '<'");
        advance();
        tok.kind = TokenKind::kUpperBound;
        tok.text = "<=";
      } else {
        tok.kind = single(ch);
        tok.text = std::string(1, advance());
      }
      out.push_back(std::move(tok));
    }
  }

 private:
  TokenKind single(char ch) {
    switch (ch) {
      case '+': return TokenKind::kPlus;
      case '-': return TokenKind::kMinus;
      case '*': return TokenKind::kStar;
      case '/': return TokenKind::kSlash;
      case '^': return TokenKind::kCaret;
      case '(': return TokenKind::kLParen;
      case ')': return TokenKind::kRParen;
      case '=': return TokenKind::kApprox;
      case '~': return TokenKind::kOrder;
      default: break;
    }
    char buf[48];
    const auto byte = static_cast<unsigned char>(ch);
    if (byte >= 0x20 && byte < 0x7f) {
      std::snprintf(buf, sizeof buf, "unexpected character '%c'", ch);
    } else {
      std::snprintf(buf, sizeof buf, "unexpected byte 0x%02X", byte);
    }
    fail(buf);
  }

  void number(Token& tok) {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (!at_end() && peek() == '.') {
      advance();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    if (!at_end() && (peek() == 'e' || peek() == 'E')) {
      const std::size_t save_pos = pos_;
      const std::size_t save_col = column_;
      advance();
      if (!at_end() && (peek() == '+' || peek() == '-')) advance();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        // "2e" followed by a non-digit is not an exponent.
        pos_ = save_pos;
        column_ = save_col;
      } else {
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
      }
    }
    tok.kind = TokenKind::kNumber;
    tok.text = std::string(src_.substr(start, pos_ - start));
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), tok.number);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
      line_ = tok.line;
      column_ = tok.column;
      fail("malformed number '" + tok.text + "'");
    }
  }

  void skip_blank() {
    while (!at_end()) {
      const char ch = peek();
      if (ch == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        return;
      }
    }
  }

  char peek() const { return src_[pos_]; }
  char advance() {
    const char ch = src_[pos_++];
    if (ch == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return ch;
  }
  bool at_end() const { return pos_ >= src_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kLexError,
                std::to_string(line_) + ":" + std::to_string(column_) + ": " + what);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace fluctuverse
