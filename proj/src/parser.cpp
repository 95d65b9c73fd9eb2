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

#include "fluctuverse/parser.hpp"

#include <string>

#include "fluctuverse/error.hpp"

namespace fluctuverse {

std::string_view to_symbol(Comparator c) {
  switch (c) {
    case Comparator::kApprox: return "=";
    case Comparator::kOrderOfMagnitude: return "~";
    case Comparator::kUpperBound: return "<=";
  }
  return "?";
}

namespace {

bool is_comparator(TokenKind k) {
  return k == TokenKind::kApprox || k == TokenKind::kOrder || k == TokenKind::kUpperBound;
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::kEnd) {
      throw Error(ErrorKind::kParseError, "token stream is not terminated");
    }
  }

  ExprPtr whole_expression() {
    ExprPtr e = expression();
    expect(TokenKind::kEnd, "end of expression");
    return e;
  }

  ParsedRelation relation() {
    ParsedRelation r;
    r.lhs = expression();
    const Token& op = peek();
    if (!is_comparator(op.kind)) fail(op, "comparator '=', '~' or '<='");
    next();
    r.comparator = op.kind == TokenKind::kApprox  ? Comparator::kApprox
                   : op.kind == TokenKind::kOrder ? Comparator::kOrderOfMagnitude
                                                  : Comparator::kUpperBound;
    r.rhs = expression();
    expect(TokenKind::kEnd, "end of relation");
    return r;
  }

 private:
  ExprPtr expression() {
    ExprPtr lhs = term();
    while (peek().kind == TokenKind::kPlus || peek().kind == TokenKind::kMinus) {
      const BinaryOp op = next().kind == TokenKind::kPlus ? BinaryOp::kAdd : BinaryOp::kSub;
      lhs = make_binop(op, lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (peek().kind == TokenKind::kStar || peek().kind == TokenKind::kSlash) {
      const BinaryOp op = next().kind == TokenKind::kStar ? BinaryOp::kMul : BinaryOp::kDiv;
      lhs = make_binop(op, lhs, unary());
    }
    return lhs;
  }

  ExprPtr unary() {
    if (peek().kind == TokenKind::kMinus) {
      next();
      return make_neg(unary());
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    while (peek().kind == TokenKind::kCaret) {
      next();
      base = make_pow(base, exponent());
    }
    return base;
  }

  Rational exponent() {
    if (peek().kind == TokenKind::kLParen) {
      next();
      const std::int64_t num = signed_integer();
      std::int64_t den = 1;
      if (peek().kind == TokenKind::kSlash) {
        next();
        den = signed_integer();
        if (den <= 0) fail(toks_[pos_ - 1], "positive exponent denominator");
      }
      expect(TokenKind::kRParen, "')' closing exponent");
      return Rational(num, den);
    }
    return Rational(signed_integer());
  }

  std::int64_t signed_integer() {
    bool negative = false;
    if (peek().kind == TokenKind::kMinus) {
      next();
      negative = true;
    }
    const Token& tok = peek();
    if (tok.kind != TokenKind::kNumber || tok.text.find_first_not_of("0123456789") != std::string::npos) {
      fail(tok, "integer exponent");
    }
    next();
    std::int64_t v = 0;
    try {
      v = std::stoll(tok.text);
    } catch (const std::exception&) {
      fail(tok, "integer exponent in range");
    }
    return negative ? -v : v;
  }

  ExprPtr primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::kNumber: {
        next();
        std::optional<Dimension> unit;
        if (peek().kind == TokenKind::kUnit) {
          const Token& u = next();
          try {
            unit = parse_unit(u.text);
          } catch (const Error& err) {
            fail(u, "valid unit (" + err.detail() + ")");
          }
        }
        return make_number(tok.number, unit);
      }
      case TokenKind::kIdent: {
        next();
        if (peek().kind != TokenKind::kLParen) return make_ident(tok.text);
        next();
        ExprPtr arg = expression();
        expect(TokenKind::kRParen, "')' closing call to " + tok.text);
        if (tok.text == "sqrt") return make_pow(arg, Rational(1, 2));
        if (tok.text == "cbrt") return make_pow(arg, Rational(1, 3));
        if (tok.text == "abs") return make_call(Function::kAbs, arg);
        if (tok.text == "exp") return make_call(Function::kExp, arg);
        if (tok.text == "ln") return make_call(Function::kLn, arg);
        fail(tok, "function name (sqrt, cbrt, abs, exp, ln)");
      }
      case TokenKind::kLParen: {
        next();
        ExprPtr inner = expression();
        expect(TokenKind::kRParen, "')'");
        return inner;
      }
      default:
        fail(tok, "number, identifier or '('");
    }
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != TokenKind::kEnd) ++pos_;
    return t;
  }

  void expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), what);
    next();
  }

  [[noreturn]] void fail(const Token& at, const std::string& expected) const {
    std::string found = at.kind == TokenKind::kEnd ? std::string("end of input")
                                                   : "'" + at.text + "'";
    throw Error(ErrorKind::kParseError, std::to_string(at.line) + ":" + std::to_string(at.column) +
                                            ": expected " + expected + ", found " + found);
  }

  std::span<const Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::span<const Token> tokens) { return Parser(tokens).whole_expression(); }

ExprPtr parse_expr(std::string_view source) {
  const auto toks = tokenize(source);
  return parse_expr(toks);
}

ParsedRelation parse_relation_expr(std::span<const Token> tokens) {
  return Parser(tokens).relation();
}

ParsedRelation parse_relation_expr(std::string_view source) {
  const auto toks = tokenize(source);
  return parse_relation_expr(toks);
}

}  // namespace fluctuverse
