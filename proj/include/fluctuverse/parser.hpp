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

#include <span>
#include <string_view>

#include "fluctuverse/expr.hpp"
#include "fluctuverse/lexer.hpp"

namespace fluctuverse {

enum class Comparator { kApprox, kOrderOfMagnitude, kUpperBound };

std::string_view to_symbol(Comparator c);

struct ParsedRelation {
  ExprPtr lhs;
  ExprPtr rhs;
  Comparator comparator = Comparator::kApprox;
};

/// Precedence, tightest first: `^`, unary minus, `* /`, `+ -`. Binary
/// operators associate left. Exponents are rational literals: `x^2`,
/// `x^-1`, `x^(1/3)`, `x^(-3/2)`. Throws Error(kParseError).
ExprPtr parse_expr(std::span<const Token> tokens);
ExprPtr parse_expr(std::string_view source);

/// `<expr> (= | ~ | <=) <expr>`.
ParsedRelation parse_relation_expr(std::span<const Token> tokens);
ParsedRelation parse_relation_expr(std::string_view source);

}  // namespace fluctuverse
