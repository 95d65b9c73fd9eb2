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

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "fluctuverse/dimension.hpp"
#include "fluctuverse/rational.hpp"

namespace fluctuverse {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct NumberLit {
  double value = 0.0;
  std::optional<Dimension> unit;  // nullopt for a bare (dimensionless) literal
};

struct Ident {
  std::string name;
};

enum class BinaryOp : char { kAdd = '+', kSub = '-', kMul = '*', kDiv = '/' };

struct BinOp {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Neg {
  ExprPtr operand;
};

/// sqrt(x) and cbrt(x) parse to Pow with exponent 1/2 and 1/3.
struct Pow {
  ExprPtr base;
  Rational exponent;
};

enum class Function { kAbs, kExp, kLn };

struct FuncCall {
  Function fn;
  ExprPtr arg;
};

/// Immutable expression tree; subtrees are shared, never mutated.
struct Expr {
  std::variant<NumberLit, Ident, BinOp, Neg, Pow, FuncCall> node;
};

ExprPtr make_number(double value, std::optional<Dimension> unit = std::nullopt);
ExprPtr make_ident(std::string name);
ExprPtr make_binop(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_neg(ExprPtr operand);
ExprPtr make_pow(ExprPtr base, Rational exponent);
ExprPtr make_call(Function fn, ExprPtr arg);

std::string_view function_name(Function fn);

/// Structural equality (numbers compare by value, units by dimension).
bool structurally_equal(const Expr& a, const Expr& b);

/// Source text that parses back to a structurally equal tree.
std::string to_source(const Expr& e);

}  // namespace fluctuverse
