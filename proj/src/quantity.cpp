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

#include "fluctuverse/quantity.hpp"

#include <cmath>
#include <cstdio>

#include "fluctuverse/error.hpp"

namespace fluctuverse {
namespace {

[[noreturn]] void mismatch(const char* op, const Dimension& a, const Dimension& b) {
  throw Error(ErrorKind::kDimensionMismatch,
              std::string("cannot ") + op + " " + a.to_vector_string() + " (" +
                  (a.is_dimensionless() ? "1" : a.to_unit_string()) + ") and " +
                  b.to_vector_string() + " (" +
                  (b.is_dimensionless() ? "1" : b.to_unit_string()) + ")");
}

Quantity finite_or_overflow(double value, const Dimension& dim, const char* op) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::kOverflow, std::string(op) + " produced a non-finite value");
  }
  return {value, dim};
}

}  // namespace

Quantity::Quantity(double value, Dimension dim) : value_(value), dim_(std::move(dim)) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::kOverflow, "quantity value is not finite");
  }
}

Quantity multiply(const Quantity& a, const Quantity& b) {
  return finite_or_overflow(a.value() * b.value(), a.dim() * b.dim(), "multiplication");
}

Quantity divide(const Quantity& a, const Quantity& b) {
  if (b.value() == 0.0) {
    throw Error(ErrorKind::kDivisionByZero, "division by a zero quantity");
  }
  return finite_or_overflow(a.value() / b.value(), a.dim() / b.dim(), "division");
}

Quantity add(const Quantity& a, const Quantity& b) {
  if (a.dim() != b.dim()) mismatch("add", a.dim(), b.dim());
  return finite_or_overflow(a.value() + b.value(), a.dim(), "addition");
}

Quantity subtract(const Quantity& a, const Quantity& b) {
  if (a.dim() != b.dim()) mismatch("subtract", a.dim(), b.dim());
  return finite_or_overflow(a.value() - b.value(), a.dim(), "subtraction");
}

Quantity negate(const Quantity& a) { return {-a.value(), a.dim()}; }

Quantity scale(const Quantity& a, double factor) {
  return finite_or_overflow(a.value() * factor, a.dim(), "scaling");
}

Quantity pow(const Quantity& a, const Rational& p) {
  if (p.is_zero()) return Quantity::dimensionless(1.0);
  if (!p.is_integer() && a.value() <= 0.0) {
    throw Error(ErrorKind::kDomainError,
                "fractional power " + p.to_string() + " of non-positive value");
  }
  double value = 0.0;
  if (p.is_integer()) {
    value = std::pow(a.value(), static_cast<double>(p.num()));
  } else if (p == Rational(1, 2)) {
    value = std::sqrt(a.value());
  } else if (p == Rational(1, 3)) {
    value = std::cbrt(a.value());
  } else {
    value = std::pow(a.value(), p.to_double());
  }
  if (value == 0.0 && a.value() == 0.0 && p < Rational(0)) {
    throw Error(ErrorKind::kDivisionByZero, "negative power of zero");
  }
  return finite_or_overflow(value, a.dim().pow(p), "power");
}

double decades_deviation(const Quantity& a, const Quantity& b) {
  if (a.dim() != b.dim()) mismatch("compare", a.dim(), b.dim());
  if (a.value() <= 0.0 || b.value() <= 0.0) {
    throw Error(ErrorKind::kDomainError, "decades deviation needs strictly positive values");
  }
  // log10 of each side keeps the ratio representable for any pair of finite doubles.
  return std::fabs(std::log10(a.value()) - std::log10(b.value()));
}

bool agree_within(const Quantity& a, const Quantity& b, double k) {
  return decades_deviation(a, b) <= k;
}

std::string format_sig5(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4e", value);
  std::string s(buf);
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::string mantissa = s.substr(0, e);
  int exponent = std::stoi(s.substr(e + 1));
  if (exponent == 0) return mantissa;
  return mantissa + "e" + std::to_string(exponent);
}

std::string to_string(const Quantity& q) {
  const std::string unit = q.dim().to_unit_string();
  return unit.empty() ? format_sig5(q.value()) : format_sig5(q.value()) + " " + unit;
}

}  // namespace fluctuverse
