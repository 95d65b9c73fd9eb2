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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "fluctuverse/rational.hpp"

namespace fluctuverse {

enum class BaseDim : std::size_t { kMass = 0, kLength = 1, kTime = 2, kTemperature = 3 };

inline constexpr std::size_t kBaseDimCount = 4;

/// Exponent vector over the CGS base dimensions (g, cm, s, K). Charge is not a
/// base dimension: esu = g^(1/2) cm^(3/2) s^-1, hence rational exponents.
class Dimension {
 public:
  constexpr Dimension() = default;

  static Dimension dimensionless() { return {}; }
  static Dimension mass() { return base(BaseDim::kMass); }
  static Dimension length() { return base(BaseDim::kLength); }
  static Dimension time() { return base(BaseDim::kTime); }
  static Dimension temperature() { return base(BaseDim::kTemperature); }
  static Dimension energy();
  static Dimension charge();
  static Dimension base(BaseDim d);
  static Dimension of(Rational mass, Rational length, Rational time, Rational temp = 0);

  const Rational& exponent(BaseDim d) const { return exps_[static_cast<std::size_t>(d)]; }
  const std::array<Rational, kBaseDimCount>& exponents() const { return exps_; }

  bool is_dimensionless() const;

  Dimension operator*(const Dimension& other) const;
  Dimension operator/(const Dimension& other) const;
  Dimension inverse() const;
  Dimension pow(const Rational& p) const;

  friend bool operator==(const Dimension&, const Dimension&) = default;

  /// Base-unit rendering, e.g. "g*cm^2/s", "s^-1", "g^(1/2)*cm^(3/2)/s".
  /// Dimensionless renders as the empty string. The result parses back to
  /// the same Dimension with parse_unit().
  std::string to_unit_string() const;

  /// Exponent vector, e.g. "[M^1 L^2 T^-1 K^0]".
  std::string to_vector_string() const;

 private:
  std::array<Rational, kBaseDimCount> exps_{};
};

/// Parses a CGS unit expression: identifiers g, cm, s, K, erg, esu (and the
/// literal 1) joined by `*` and `/`, each optionally raised with `^<int>` or
/// `^(<int>/<int>)`. Throws Error(kParseError) on malformed input.
Dimension parse_unit(std::string_view text);

}  // namespace fluctuverse
