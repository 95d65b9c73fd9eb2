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

#include "fluctuverse/expr.hpp"

#include <array>
#include <charconv>

namespace fluctuverse {
namespace {

// Binding strength used by the printer; higher binds tighter.
enum Precedence { kAdditive = 1, kMultiplicative = 2, kUnary = 3, kPower = 4, kAtom = 5 };

int precedence(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BinOp>) {
          return (n.op == BinaryOp::kAdd || n.op == BinaryOp::kSub) ? kAdditive : kMultiplicative;
        } else if constexpr (std::is_same_v<T, Neg>) {
          return kUnary;
        } else if constexpr (std::is_same_v<T, Pow>) {
          return kPower;
        } else {
          return kAtom;
        }
      },
      e.node);
}

std::string shortest(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string wrap(const Expr& e, bool parens) {
  return parens ? "(" + to_source(e) + ")" : to_source(e);
}

}  // namespace

ExprPtr make_number(double value, std::optional<Dimension> unit) {
  if (unit && unit->is_dimensionless()) unit.reset();
  return std::make_shared<const Expr>(Expr{NumberLit{value, std::move(unit)}});
}
ExprPtr make_ident(std::string name) {
  return std::make_shared<const Expr>(Expr{Ident{std::move(name)}});
}
ExprPtr make_binop(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{BinOp{op, std::move(lhs), std::move(rhs)}});
}
ExprPtr make_neg(ExprPtr operand) {
  return std::make_shared<const Expr>(Expr{Neg{std::move(operand)}});
}
ExprPtr make_pow(ExprPtr base, Rational exponent) {
  return std::make_shared<const Expr>(Expr{Pow{std::move(base), exponent}});
}
ExprPtr make_call(Function fn, ExprPtr arg) {
  return std::make_shared<const Expr>(Expr{FuncCall{fn, std::move(arg)}});
}

std::string_view function_name(Function fn) {
  switch (fn) {
    case Function::kAbs: return "abs";
    case Function::kExp: return "exp";
    case Function::kLn: return "ln";
  }
  return "?";
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, NumberLit>) {
          return x.value == y.value && x.unit == y.unit;
        } else if constexpr (std::is_same_v<T, Ident>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, BinOp>) {
          return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) &&
                 structurally_equal(*x.rhs, *y.rhs);
        } else if constexpr (std::is_same_v<T, Neg>) {
          return structurally_equal(*x.operand, *y.operand);
        } else if constexpr (std::is_same_v<T, Pow>) {
          return x.exponent == y.exponent && structurally_equal(*x.base, *y.base);
        } else {
          return x.fn == y.fn && structurally_equal(*x.arg, *y.arg);
        }
      },
      a.node);
}

std::string to_source(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberLit>) {
          std::string s = shortest(n.value);
          if (n.unit) s += " [" + n.unit->to_unit_string() + "]";
          return s;
        } else if constexpr (std::is_same_v<T, Ident>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, BinOp>) {
          const int p = (n.op == BinaryOp::kAdd || n.op == BinaryOp::kSub) ? kAdditive : kMultiplicative;
          // Left-associative: a right child of equal precedence needs parens.
          return wrap(*n.lhs, precedence(*n.lhs) < p) + " " + static_cast<char>(n.op) + " " +
                 wrap(*n.rhs, precedence(*n.rhs) <= p);
        } else if constexpr (std::is_same_v<T, Neg>) {
          return "-" + wrap(*n.operand, precedence(*n.operand) < kUnary);
        } else if constexpr (std::is_same_v<T, Pow>) {
          const std::string base = wrap(*n.base, precedence(*n.base) < kAtom);
          if (n.exponent.is_integer()) return base + "^" + n.exponent.to_string();
          return base + "^(" + n.exponent.to_string() + ")";
        } else {
          return std::string(function_name(n.fn)) + "(" + to_source(*n.arg) + ")";
        }
      },
      e.node);
}

}  // namespace fluctuverse
