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

#include <string>

#include "fluctuverse/dimension.hpp"
#include "fluctuverse/rational.hpp"

namespace fluctuverse {

/// A finite CGS magnitude with its dimension. Every Quantity returned by a
/// successful operation holds a finite value.
class Quantity {
 public:
  Quantity() = default;
  /// Throws Error(kOverflow) if value is not finite.
  Quantity(double value, Dimension dim);

  static Quantity dimensionless(double value) { return {value, Dimension::dimensionless()}; }

  double value() const { return value_; }
  const Dimension& dim() const { return dim_; }

  friend bool operator==(const Quantity&, const Quantity&) = default;

 private:
  double value_ = 0.0;
  Dimension dim_;
};

Quantity multiply(const Quantity& a, const Quantity& b);
Quantity divide(const Quantity& a, const Quantity& b);
Quantity add(const Quantity& a, const Quantity& b);
Quantity subtract(const Quantity& a, const Quantity& b);
Quantity negate(const Quantity& a);
Quantity pow(const Quantity& a, const Rational& p);
Quantity scale(const Quantity& a, double factor);

inline Quantity operator*(const Quantity& a, const Quantity& b) { return multiply(a, b); }
inline Quantity operator/(const Quantity& a, const Quantity& b) { return divide(a, b); }
inline Quantity operator+(const Quantity& a, const Quantity& b) { return add(a, b); }
inline Quantity operator-(const Quantity& a, const Quantity& b) { return subtract(a, b); }
inline Quantity operator*(double k, const Quantity& a) { return scale(a, k); }

/// |log10(a/b)|. Requires equal dimensions and strictly positive values.
double decades_deviation(const Quantity& a, const Quantity& b);

/// decades_deviation(a, b) <= k.
bool agree_within(const Quantity& a, const Quantity& b, double k);

/// 5 significant digits with a compact exponent: "2.1764e-5", "1.3206e28".
std::string format_sig5(double value);

/// Value and unit, e.g. "2.1764e-5 g"; dimensionless prints the bare value.
std::string to_string(const Quantity& q);

}  // namespace fluctuverse
