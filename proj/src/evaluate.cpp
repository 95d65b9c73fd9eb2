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

#include "fluctuverse/evaluate.hpp"

#include <cmath>

#include "fluctuverse/error.hpp"

namespace fluctuverse {
namespace {

// Runs op; an Error raised by it is re-thrown with the subtree text attached.
// Errors from child nodes have already been located and pass through untouched.
template <typename F>
auto located(const Expr& where, F&& op) -> decltype(op()) {
  try {
    return op();
  } catch (const Error& err) {
    throw Error(err.kind(), err.detail() + " in `" + to_source(where) + "`");
  }
}

Dimension require_dimensionless(const Expr& where, const Dimension& d, std::string_view fn) {
  if (!d.is_dimensionless()) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::string(fn) + " needs a dimensionless argument, got " + d.to_vector_string() +
                    " (" + d.to_unit_string() + ") in `" + to_source(where) + "`");
  }
  return d;
}

}  // namespace

Dimension infer_dimension(const Expr& e, const ConstantsRegistry& reg) {
  return std::visit(
      [&](const auto& n) -> Dimension {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberLit>) {
          return n.unit.value_or(Dimension::dimensionless());
        } else if constexpr (std::is_same_v<T, Ident>) {
          return reg.at(n.name).dim();
        } else if constexpr (std::is_same_v<T, BinOp>) {
          const Dimension l = infer_dimension(*n.lhs, reg);
          const Dimension r = infer_dimension(*n.rhs, reg);
          switch (n.op) {
            case BinaryOp::kMul: return l * r;
            case BinaryOp::kDiv: return l / r;
            default:
              if (l != r) {
                throw Error(ErrorKind::kDimensionMismatch,
                            std::string("cannot ") + (n.op == BinaryOp::kAdd ? "add " : "subtract ") +
                                l.to_vector_string() + " (" + l.to_unit_string() + ") and " +
                                r.to_vector_string() + " (" + r.to_unit_string() + ") in `" +
                                to_source(e) + "`");
              }
              return l;
          }
        } else if constexpr (std::is_same_v<T, Neg>) {
          return infer_dimension(*n.operand, reg);
        } else if constexpr (std::is_same_v<T, Pow>) {
          return infer_dimension(*n.base, reg).pow(n.exponent);
        } else {
          const Dimension d = infer_dimension(*n.arg, reg);
          if (n.fn == Function::kAbs) return d;
          return require_dimensionless(e, d, function_name(n.fn));
        }
      },
      e.node);
}

Quantity evaluate(const Expr& e, const ConstantsRegistry& reg) {
  return std::visit(
      [&](const auto& n) -> Quantity {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberLit>) {
          return Quantity(n.value, n.unit.value_or(Dimension::dimensionless()));
        } else if constexpr (std::is_same_v<T, Ident>) {
          return reg.at(n.name);
        } else if constexpr (std::is_same_v<T, BinOp>) {
          const Quantity l = evaluate(*n.lhs, reg);
          const Quantity r = evaluate(*n.rhs, reg);
          return located(e, [&] {
            switch (n.op) {
              case BinaryOp::kAdd: return add(l, r);
              case BinaryOp::kSub: return subtract(l, r);
              case BinaryOp::kMul: return multiply(l, r);
              case BinaryOp::kDiv: return divide(l, r);
            }
            return l;
          });
        } else if constexpr (std::is_same_v<T, Neg>) {
          return negate(evaluate(*n.operand, reg));
        } else if constexpr (std::is_same_v<T, Pow>) {
          const Quantity b = evaluate(*n.base, reg);
          return located(e, [&] { return pow(b, n.exponent); });
        } else {
          const Quantity a = evaluate(*n.arg, reg);
          if (n.fn == Function::kAbs) return Quantity(std::fabs(a.value()), a.dim());
          require_dimensionless(e, a.dim(), function_name(n.fn));
          return located(e, [&] {
            if (n.fn == Function::kLn) {
              if (a.value() <= 0.0) throw Error(ErrorKind::kDomainError, "ln of non-positive value");
              return Quantity::dimensionless(std::log(a.value()));
            }
            return Quantity::dimensionless(std::exp(a.value()));
          });
        }
      },
      e.node);
}

}  // namespace fluctuverse
