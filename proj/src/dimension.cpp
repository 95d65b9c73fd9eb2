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

#include "fluctuverse/dimension.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "fluctuverse/error.hpp"

namespace fluctuverse {
namespace {

constexpr std::array<std::string_view, kBaseDimCount> kBaseUnitNames = {"g", "cm", "s", "K"};
constexpr std::array<std::string_view, kBaseDimCount> kBaseSymbols = {"M", "L", "T", "K"};

std::string exponent_suffix(const Rational& e) {
  if (e == Rational(1)) return "";
  if (e.is_integer()) return "^" + e.to_string();
  return "^(" + e.to_string() + ")";
}

class UnitParser {
 public:
  explicit UnitParser(std::string_view text) : text_(text) {}

  Dimension parse() {
    skip_ws();
    if (at_end()) fail("empty unit expression");
    Dimension dim = factor();
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = text_[pos_];
      if (op != '*' && op != '/') fail("expected '*' or '/'");
      ++pos_;
      const Dimension rhs = factor();
      dim = op == '*' ? dim * rhs : dim / rhs;
    }
    return dim;
  }

 private:
  Dimension factor() {
    skip_ws();
    if (at_end()) fail("expected unit name");
    Dimension d;
    if (text_[pos_] == '1') {
      ++pos_;
    } else {
      const std::size_t start = pos_;
      while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name.empty()) fail("expected unit name");
      d = named(name);
    }
    skip_ws();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      d = d.pow(exponent());
    }
    return d;
  }

  Rational exponent() {
    skip_ws();
    if (!at_end() && text_[pos_] == '(') {
      ++pos_;
      const std::int64_t num = integer();
      std::int64_t den = 1;
      skip_ws();
      if (!at_end() && text_[pos_] == '/') {
        ++pos_;
        den = integer();
      }
      skip_ws();
      if (at_end() || text_[pos_] != ')') fail("expected ')' closing exponent");
      ++pos_;
      if (den <= 0) fail("exponent denominator must be positive");
      return Rational(num, den);
    }
    return Rational(integer());
  }

  std::int64_t integer() {
    skip_ws();
    bool negative = false;
    if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::int64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected integer exponent");
    pos_ += static_cast<std::size_t>(ptr - first);
    return negative ? -value : value;
  }

  Dimension named(std::string_view name) {
    for (std::size_t i = 0; i < kBaseDimCount; ++i) {
      if (name == kBaseUnitNames[i]) return Dimension::base(static_cast<BaseDim>(i));
    }
    if (name == "erg") return Dimension::energy();
    if (name == "esu") return Dimension::charge();
    fail("unknown unit '" + std::string(name) + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kParseError,
                "unit '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Dimension Dimension::base(BaseDim d) {
  Dimension out;
  out.exps_[static_cast<std::size_t>(d)] = Rational(1);
  return out;
}

Dimension Dimension::of(Rational mass, Rational length, Rational time, Rational temp) {
  Dimension out;
  out.exps_ = {mass, length, time, temp};
  return out;
}

Dimension Dimension::energy() { return of(1, 2, -2); }

Dimension Dimension::charge() { return of(Rational(1, 2), Rational(3, 2), -1); }

bool Dimension::is_dimensionless() const {
  for (const auto& e : exps_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Dimension Dimension::operator*(const Dimension& other) const {
  Dimension out;
  for (std::size_t i = 0; i < kBaseDimCount; ++i) out.exps_[i] = exps_[i] + other.exps_[i];
  return out;
}

Dimension Dimension::operator/(const Dimension& other) const { return *this * other.inverse(); }

Dimension Dimension::inverse() const { return pow(Rational(-1)); }

Dimension Dimension::pow(const Rational& p) const {
  Dimension out;
  for (std::size_t i = 0; i < kBaseDimCount; ++i) out.exps_[i] = exps_[i] * p;
  return out;
}

std::string Dimension::to_unit_string() const {
  std::string numerator;
  bool has_positive = false;
  for (std::size_t i = 0; i < kBaseDimCount; ++i) {
    if (exps_[i] > Rational(0)) {
      if (has_positive) numerator += '*';
      numerator += std::string(kBaseUnitNames[i]) + exponent_suffix(exps_[i]);
      has_positive = true;
    }
  }
  std::string out = numerator;
  bool first_negative = true;
  for (std::size_t i = 0; i < kBaseDimCount; ++i) {
    if (exps_[i] < Rational(0)) {
      if (has_positive) {
        out += "/" + std::string(kBaseUnitNames[i]) + exponent_suffix(-exps_[i]);
      } else {
        if (!first_negative) out += '*';
        out += std::string(kBaseUnitNames[i]) +
               (exps_[i].is_integer() ? "^" + exps_[i].to_string() : "^(" + exps_[i].to_string() + ")");
      }
      first_negative = false;
    }
  }
  return out;
}

std::string Dimension::to_vector_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < kBaseDimCount; ++i) {
    if (i > 0) out += ' ';
    out += std::string(kBaseSymbols[i]) + "^" + exps_[i].to_string();
  }
  return out + "]";
}

Dimension parse_unit(std::string_view text) { return UnitParser(text).parse(); }

}  // namespace fluctuverse
