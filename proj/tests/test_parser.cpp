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

#include <random>

#include "doctest.h"
#include "fluctuverse/constants.hpp"
#include "fluctuverse/error.hpp"
#include "fluctuverse/evaluate.hpp"
#include "fluctuverse/parser.hpp"
#include "fluctuverse/relation.hpp"

using namespace fluctuverse;

namespace {

std::vector<TokenKind> kinds(std::string_view src) {
  std::vector<TokenKind> out;
  for (const auto& t : tokenize(src)) out.push_back(t.kind);
  return out;
}

template <typename F>
Error caught(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an Error");
  return Error(ErrorKind::kIoError, "");
}

const BinOp& as_binop(const ExprPtr& e) { return std::get<BinOp>(e->node); }

}  // namespace

TEST_SUITE("lexer") {
  TEST_CASE("identifiers and operators") {
    const auto toks = tokenize("hbar*c/G");
    REQUIRE(toks.size() == 6);
    CHECK(toks[0].kind == TokenKind::kIdent);
    CHECK(toks[0].text == "hbar");
    CHECK(toks[1].kind == TokenKind::kStar);
    CHECK(toks[2].text == "c");
    CHECK(toks[3].kind == TokenKind::kSlash);
    CHECK(toks[4].text == "G");
    CHECK(toks[5].kind == TokenKind::kEnd);
  }

  TEST_CASE("numbers") {
    const auto toks = tokenize("(1/137.036)/10");
    CHECK(kinds("(1/137.036)/10") ==
          std::vector<TokenKind>{TokenKind::kLParen, TokenKind::kNumber, TokenKind::kSlash, TokenKind::kNumber,
                                 TokenKind::kRParen, TokenKind::kSlash, TokenKind::kNumber, TokenKind::kEnd});
    CHECK(toks[1].number == 1.0);
    CHECK(toks[3].number == 137.036);
    CHECK(toks[6].number == 10.0);
    CHECK(tokenize("4.80320471e-10")[0].number == 4.80320471e-10);
    CHECK(tokenize("1e+17")[0].number == 1e17);
    CHECK(tokenize(".5")[0].number == 0.5);
  }

  TEST_CASE("comparators, units, comments") {
    const auto k = kinds("m_pi ~ cbrt(hbar^2 * H0 / (G*c))");
    CHECK(std::count(k.begin(), k.end(), TokenKind::kOrder) == 1);
    CHECK(kinds("a <= b")[1] == TokenKind::kUpperBound);
    CHECK(kinds("a = b")[1] == TokenKind::kApprox);
    const auto toks = tokenize("1e17 [s^-1] # trailing\n");
    REQUIRE(toks.size() == 3);
    CHECK(toks[1].kind == TokenKind::kUnit);
    CHECK(toks[1].text == "s^-1");
  }

  TEST_CASE("errors carry line and column") {
    const Error e = caught([] { tokenize("a +\n  $b"); });
    CHECK(e.kind() == ErrorKind::kLexError);
    CHECK(std::string(e.what()).find("2:3") != std::string::npos);
    CHECK(std::string(e.what()).find("'$'") != std::string::npos);
    CHECK(caught([] { tokenize("a < b"); }).kind() == ErrorKind::kLexError);
    CHECK(caught([] { tokenize("1 [cm"); }).kind() == ErrorKind::kLexError);
    CHECK(caught([] { tokenize("\xce\xb1"); }).kind() == ErrorKind::kLexError);
  }
}

TEST_SUITE("parser") {
  TEST_CASE("precedence and associativity") {
    const ExprPtr e = parse_expr("a + b*c");
    const BinOp& top = as_binop(e);
    CHECK(top.op == BinaryOp::kAdd);
    CHECK(std::get<Ident>(top.lhs->node).name == "a");
    CHECK(as_binop(top.rhs).op == BinaryOp::kMul);

    const BinOp& left = as_binop(parse_expr("a - b - c"));
    CHECK(left.op == BinaryOp::kSub);
    CHECK(as_binop(left.lhs).op == BinaryOp::kSub);

    // ^ binds tighter than unary minus.
    const ExprPtr neg = parse_expr("-a^2");
    REQUIRE(std::holds_alternative<Neg>(neg->node));
    CHECK(std::holds_alternative<Pow>(std::get<Neg>(neg->node).operand->node));
  }

  TEST_CASE("sqrt and cbrt become rational powers") {
    const ExprPtr s = parse_expr("sqrt(x)");
    REQUIRE(std::holds_alternative<Pow>(s->node));
    CHECK(std::get<Pow>(s->node).exponent == Rational(1, 2));
    CHECK(std::get<Pow>(parse_expr("cbrt(x)")->node).exponent == Rational(1, 3));
    CHECK(std::get<Pow>(parse_expr("x^(2/4)")->node).exponent == Rational(1, 2));
    CHECK(std::get<Pow>(parse_expr("x^-3")->node).exponent == Rational(-3));
    CHECK(std::get<Pow>(parse_expr("x^(-3/2)")->node).exponent == Rational(-3, 2));
  }

  TEST_CASE("parse errors name what was expected") {
    CHECK(caught([] { parse_expr("a +"); }).kind() == ErrorKind::kParseError);
    CHECK(std::string(caught([] { parse_expr("(a"); }).what()).find("expected ')'") != std::string::npos);
    CHECK(caught([] { parse_expr("x^0.5"); }).kind() == ErrorKind::kParseError);
    CHECK(caught([] { parse_expr("foo(x)"); }).kind() == ErrorKind::kParseError);
    CHECK(caught([] { parse_expr("a b"); }).kind() == ErrorKind::kParseError);
    CHECK(caught([] { parse_expr("x^(1/0)"); }).kind() == ErrorKind::kParseError);
    CHECK(caught([] { parse_expr("1 [parsec]"); }).kind() == ErrorKind::kParseError);
    CHECK(caught([] { parse_relation_expr("a + b"); }).kind() == ErrorKind::kParseError);
  }

  TEST_CASE("relation comparators") {
    CHECK(parse_relation_expr("a = b").comparator == Comparator::kApprox);
    CHECK(parse_relation_expr("a ~ b").comparator == Comparator::kOrderOfMagnitude);
    CHECK(parse_relation_expr("a <= b").comparator == Comparator::kUpperBound);
  }

  TEST_CASE("printer output reparses") {
    for (const char* src : {"a + b*c", "(a + b)*c", "a - (b - c)", "a/(b/c)", "-a^2", "(-a)^2", "(a^2)^3",
                            "x^(-1/2)", "2*pi*hbar*1e9 [s^-1]", "abs(ln(exp(1)))", "a - -b", "1e-300",
                            "hbar^2/(2*m_pi^3*G)", "G*sqrt(N)*m_pi^2/c"}) {
      const ExprPtr e = parse_expr(src);
      CAPTURE(src);
      CAPTURE(to_source(*e));
      CHECK(structurally_equal(*e, *parse_expr(to_source(*e))));
    }
  }
}

TEST_SUITE("evaluation") {
  const ConstantsRegistry reg = ConstantsRegistry::defaults();

  TEST_CASE("infer_dimension") {
    CHECK(infer_dimension(*parse_expr("hbar*c/G"), reg) == Dimension::mass().pow(2));
    CHECK(infer_dimension(*parse_expr("G*m_P^2/e^2"), reg).is_dimensionless());
    const Error e = caught([&] { infer_dimension(*parse_expr("hbar + c"), reg); });
    CHECK(e.kind() == ErrorKind::kDimensionMismatch);
    CHECK(std::string(e.what()).find("hbar + c") != std::string::npos);
    CHECK(caught([&] { infer_dimension(*parse_expr("exp(c)"), reg); }).kind() == ErrorKind::kDimensionMismatch);
    CHECK(caught([&] { infer_dimension(*parse_expr("ln(m_pi)"), reg); }).kind() == ErrorKind::kDimensionMismatch);
    CHECK(caught([&] { infer_dimension(*parse_expr("zeta*2"), reg); }).kind() == ErrorKind::kUnknownIdentifier);
  }

  TEST_CASE("eval_expr examples") {
    const Quantity m_p = evaluate(*parse_expr("sqrt(hbar*c/G)"), reg);
    CHECK(m_p.value() == doctest::Approx(2.1764343420511264e-05).epsilon(1e-12));
    CHECK(m_p.dim() == Dimension::mass());
    const Quantity r = evaluate(*parse_expr("c/H0"), reg);
    CHECK(r.value() == doctest::Approx(1.3206716211453744e28).epsilon(1e-12));
    CHECK(r.dim() == Dimension::length());
    const Quantity a = evaluate(*parse_expr("(1/137.036)/10"), reg);
    CHECK(a.value() == doctest::Approx(7.2973524e-4).epsilon(1e-7));
    CHECK(a.dim().is_dimensionless());
    CHECK(evaluate(*parse_expr("hbar^2/(2*m_pi^3*G)"), reg).value() ==
          doctest::Approx(5.409212644928752e26).epsilon(1e-12));
    CHECK(evaluate(*parse_expr("G*sqrt(N)*m_pi^2/c"), reg).value() ==
          doctest::Approx(1.3781824625566628e-27).epsilon(1e-12));
    CHECK(evaluate(*parse_expr("1e17 [s]"), reg).dim() == Dimension::time());
    CHECK(evaluate(*parse_expr("-abs(-3 [cm])"), reg).value() == -3.0);
    CHECK(evaluate(*parse_expr("ln(exp(2))"), reg).value() == doctest::Approx(2.0));
  }

  TEST_CASE("evaluation errors are located") {
    const Error e = caught([&] { evaluate(*parse_expr("c + (m_pi/0)"), reg); });
    CHECK(e.kind() == ErrorKind::kDivisionByZero);
    CHECK(std::string(e.what()).find("m_pi / 0") != std::string::npos);
    CHECK(caught([&] { evaluate(*parse_expr("ln(0)"), reg); }).kind() == ErrorKind::kDomainError);
    CHECK(caught([&] { evaluate(*parse_expr("exp(1000)"), reg); }).kind() == ErrorKind::kOverflow);
    CHECK(caught([&] { evaluate(*parse_expr("(-c)^(1/2)"), reg); }).kind() == ErrorKind::kDomainError);
  }

  TEST_CASE("evaluation is pure") {
    const ExprPtr e = parse_expr("cbrt(hbar^2*H0/(G*c)) + m_pi*exp(0.5)");
    const double first = evaluate(*e, reg).value();
    for (int i = 0; i < 10; ++i) CHECK(evaluate(*e, reg).value() == first);
  }
}
