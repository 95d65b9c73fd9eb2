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
#include "fluctuverse/quantity.hpp"
#include "oracles.hpp"

using namespace fluctuverse;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::kIoError;
}

Dimension random_dimension(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return Dimension::of(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                       Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("reduction is canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).den() == 2);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(0, -3) == Rational(0));
  }

  TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
    CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
    CHECK(Rational(1, 3) / Rational(2) == Rational(1, 6));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-3, 2).to_string() == "-3/2");
    CHECK(Rational(4).to_string() == "4");
  }

  TEST_CASE("zero denominator") {
    CHECK(kind_of([] { Rational(1, 0); }) == ErrorKind::kDivisionByZero);
    CHECK(kind_of([] { (void)(Rational(1) / Rational(0)); }) == ErrorKind::kDivisionByZero);
  }
}

TEST_SUITE("dimension") {
  TEST_CASE("charge squared is energy times length") {
    const Dimension q2 = Dimension::charge() * Dimension::charge();
    CHECK(q2 == Dimension::energy() * Dimension::length());
    CHECK(q2 == Dimension::of(1, 3, -2));
  }

  TEST_CASE("abelian group laws (property)") {
    std::mt19937_64 rng(20261019);
    for (int i = 0; i < 500; ++i) {
      const Dimension a = random_dimension(rng);
      const Dimension b = random_dimension(rng);
      const Dimension d = random_dimension(rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * d == a * (b * d));
      CHECK((a * a.inverse()).is_dimensionless());
      for (const Rational p : {Rational(1, 3), Rational(-2, 5), Rational(7, 2)}) {
        CHECK(a.pow(p).pow(Rational(1) / p) == a);
      }
    }
  }

  TEST_CASE("unit strings parse back (property)") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
      const Dimension d = random_dimension(rng);
      if (d.is_dimensionless()) continue;
      CHECK(parse_unit(d.to_unit_string()) == d);
    }
    CHECK(Dimension::of(1, 2, -1).to_unit_string() == "g*cm^2/s");
    CHECK(Dimension::time().inverse().to_unit_string() == "s^-1");
    CHECK(Dimension::charge().to_unit_string() == "g^(1/2)*cm^(3/2)/s");
    CHECK(Dimension::dimensionless().to_unit_string().empty());
  }

  TEST_CASE("unit parser") {
    CHECK(parse_unit("erg*s") == Dimension::of(1, 2, -1));
    CHECK(parse_unit("cm^3/g/s^2") == Dimension::of(-1, 3, -2));
    CHECK(parse_unit("esu") == Dimension::charge());
    CHECK(parse_unit("g^(1/2) * cm^(3/2) / s") == Dimension::charge());
    CHECK(parse_unit("erg/K") == Dimension::of(1, 2, -2, -1));
    CHECK(parse_unit("s^-1") == Dimension::time().inverse());
    CHECK(parse_unit("1") == Dimension::dimensionless());
    CHECK(kind_of([] { parse_unit("furlong"); }) == ErrorKind::kParseError);
    CHECK(kind_of([] { parse_unit("cm^"); }) == ErrorKind::kParseError);
    CHECK(kind_of([] { parse_unit("cm^(1/0)"); }) == ErrorKind::kParseError);
    CHECK(kind_of([] { parse_unit(""); }) == ErrorKind::kParseError);
  }
}

TEST_SUITE("quantity") {
  const ConstantsRegistry reg = ConstantsRegistry::defaults();

  TEST_CASE("multiply: e*e is an energy times a length") {
    const Quantity e2 = reg.at("e") * reg.at("e");
    CHECK(e2.value() == doctest::Approx(2.3070775486166186e-19).epsilon(1e-12));
    CHECK(e2.dim() == Dimension::of(1, 3, -2));
    const Quantity x(3.5, Dimension::length());
    CHECK(x * Quantity::dimensionless(1.0) == x);
  }

  TEST_CASE("multiply: G*m_pi^2") {
    const Quantity& m = reg.at("m_pi");
    const Quantity gm2 = reg.at("G") * m * m;
    CHECK(gm2.value() == doctest::Approx(4.131687080223548e-57).epsilon(1e-12));
    CHECK(gm2.dim() == Dimension::energy() * Dimension::length());
  }

  TEST_CASE("add and subtract") {
    const Quantity one_cm(1.0, Dimension::length());
    CHECK((one_cm + Quantity(2.0, Dimension::length())).value() == 3.0);
    CHECK(kind_of([&] { (void)(one_cm + Quantity(1.0, Dimension::mass())); }) == ErrorKind::kDimensionMismatch);
    try {
      (void)(one_cm - Quantity(1.0, Dimension::mass()));
    } catch (const Error& err) {
      CHECK(std::string(err.what()).find("[M^0 L^1 T^0 K^0]") != std::string::npos);
      CHECK(std::string(err.what()).find("[M^1 L^0 T^0 K^0]") != std::string::npos);
    }
    // -alpha/r + beta*r at the Compton point, natural units.
    const Quantity sum = Quantity::dimensionless(-1.0 / 1.0) + Quantity::dimensionless(1.0 * 1.0);
    CHECK(sum.value() == 0.0);
    CHECK(sum.dim().is_dimensionless());
  }

  TEST_CASE("overflow and division by zero") {
    const Quantity big(1e300, Dimension::length());
    CHECK(kind_of([&] { (void)(big * big); }) == ErrorKind::kOverflow);
    CHECK(kind_of([&] { (void)(big / Quantity(0.0, Dimension::time())); }) == ErrorKind::kDivisionByZero);
    CHECK(kind_of([] { Quantity(std::nan(""), Dimension::length()); }) == ErrorKind::kOverflow);
  }

  TEST_CASE("pow: Weinberg mass and Planck mass") {
    const Quantity& hbar = reg.at("hbar");
    const Quantity weinberg = pow(hbar * hbar * reg.at("H0") / (reg.at("G") * reg.at("c")), Rational(1, 3));
    CHECK(weinberg.dim() == Dimension::mass());
    CHECK(weinberg.value() == doctest::Approx(1.0805642228265455e-25).epsilon(1e-12));
    CHECK(decades_deviation(weinberg, reg.at("m_pi")) == doctest::Approx(0.36221026515739346).epsilon(1e-12));

    const Quantity m_p = pow(hbar * reg.at("c") / reg.at("G"), Rational(1, 2));
    CHECK(m_p.dim() == Dimension::mass());
    CHECK(m_p.value() == doctest::Approx(2.1764343420511264e-05).epsilon(1e-12));

    const Quantity zeroth = pow(Quantity(42.0, Dimension::length()), Rational(0));
    CHECK(zeroth.value() == 1.0);
    CHECK(zeroth.dim().is_dimensionless());
    CHECK(kind_of([] { pow(Quantity(-8.0, Dimension::length()), Rational(1, 3)); }) == ErrorKind::kDomainError);
    CHECK(pow(Quantity(-2.0, Dimension::length()), Rational(3)).value() == -8.0);
  }

  TEST_CASE("decades deviation") {
    const Quantity a = Quantity::dimensionless(1e40);
    CHECK(decades_deviation(a, a) == 0.0);
    const double sqrt_n = std::sqrt(reg.value("N"));
    const Quantity& m = reg.at("m_pi");
    const Quantity hbar_check = reg.at("G") * Quantity::dimensionless(sqrt_n) * m * m / reg.at("c");
    CHECK(hbar_check.value() == doctest::Approx(1.3781824625566628e-27).epsilon(1e-12));
    CHECK(decades_deviation(hbar_check, reg.at("hbar")) == doctest::Approx(0.11623055838568855).epsilon(1e-10));
    const Quantity& e = reg.at("e");
    const Quantity ratio = e * e / (reg.at("G") * m * m);
    CHECK(ratio.value() == doctest::Approx(5.583863210889127e37).epsilon(1e-12));
    CHECK(decades_deviation(ratio, Quantity::dimensionless(sqrt_n)) ==
          doctest::Approx(2.253065229260913).epsilon(1e-12));

    CHECK(kind_of([] { decades_deviation(Quantity::dimensionless(0.0), Quantity::dimensionless(1.0)); }) ==
          ErrorKind::kDomainError);
    CHECK(kind_of([] { decades_deviation(Quantity(1.0, Dimension::mass()), Quantity::dimensionless(1.0)); }) ==
          ErrorKind::kDimensionMismatch);
  }

  TEST_CASE("decades deviation is symmetric (property)") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> exponent(-300.0, 300.0);
    for (int i = 0; i < 2000; ++i) {
      const Dimension d = random_dimension(rng);
      const Quantity a(std::pow(10.0, exponent(rng)), d);
      const Quantity b(std::pow(10.0, exponent(rng)), d);
      CHECK(decades_deviation(a, b) == decades_deviation(b, a));
      CHECK(decades_deviation(a, b) >= 0.0);
    }
  }

  TEST_CASE("agree_within") {
    const double n = reg.value("N");
    const Quantity& m = reg.at("m_pi");
    const Quantity& c = reg.at("c");
    const Quantity radius = reg.at("G") * Quantity::dimensionless(n) * m / (c * c);
    const Quantity brownian = radius / Quantity::dimensionless(std::sqrt(n));
    const Quantity compton = reg.at("hbar") / (m * c);
    CHECK(brownian.value() == doctest::Approx(1.8476732319183387e-13).epsilon(1e-12));
    CHECK(compton.value() == doctest::Approx(1.4138215877393478e-13).epsilon(1e-12));
    CHECK(agree_within(brownian, compton, 1.0));
    CHECK(agree_within(compton, compton, 0.0));

    const Quantity m_p = reg.at("m_P");
    const Quantity& e = reg.at("e");
    const Quantity eq11 = reg.at("G") * m_p * m_p / (e * e);
    CHECK(eq11.value() == doctest::Approx(137.0359992214086).epsilon(1e-10));
    CHECK_FALSE(agree_within(eq11, Quantity::dimensionless(1.0), 1.0));
    CHECK(agree_within(eq11, Quantity::dimensionless(1.0), 2.5));
  }

  TEST_CASE("formatting") {
    CHECK(format_sig5(2.1764343420511264e-05) == "2.1764e-5");
    CHECK(format_sig5(1.3206716211453744e28) == "1.3207e28");
    CHECK(format_sig5(7.0) == "7.0000");
    CHECK(to_string(Quantity(2.1764343420511264e-05, Dimension::mass())) == "2.1764e-5 g");
  }
}
