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
#include "fluctuverse/error.hpp"
#include "fluctuverse/scale_bridge.hpp"
#include "oracles.hpp"

using namespace fluctuverse;

namespace {

const ConstantsRegistry& registry() {
  static const ConstantsRegistry reg = ConstantsRegistry::defaults();
  return reg;
}

Quantity grams(double m) { return Quantity(m, Dimension::mass()); }

}  // namespace

TEST_CASE("Planck scales") {
  const PlanckScales p = planck_scales(registry());
  CHECK(p.mass.value() == doctest::Approx(2.1764343420511264e-05).epsilon(1e-12));
  CHECK(p.length.value() == doctest::Approx(1.61625502392855e-33).epsilon(1e-12));
  CHECK(p.time.value() == doctest::Approx(5.391246446661944e-44).epsilon(1e-12));
  CHECK(p.density.value() == doctest::Approx(5.1548485064034075e93).epsilon(1e-12));
  CHECK(p.mass.dim() == Dimension::mass());
  CHECK(p.length.dim() == Dimension::length());
  CHECK(p.time.dim() == Dimension::time());
  CHECK(p.density.dim() == Dimension::mass() / Dimension::length().pow(Rational(3)));
  // l_P^2 = hbar G / c^3
  CHECK(oracle::rel(p.length.value() * p.length.value(),
                    oracle::hbar * oracle::G / std::pow(oracle::c, 3)) <= 1e-12);
}

TEST_CASE("Compton and gravitational scales") {
  const auto& reg = registry();
  CHECK(compton_length(grams(oracle::m_pi), reg).value() ==
        doctest::Approx(1.4138215877393478e-13).epsilon(1e-12));
  CHECK(compton_time(grams(oracle::m_pi), reg).value() ==
        doctest::Approx(4.716001186858903e-24).epsilon(1e-12));
  CHECK(schwarzschild_radius(grams(oracle::m_pi), reg).value() ==
        doctest::Approx(1.8476732319183385e-53).epsilon(1e-12));
  CHECK(self_gravity_length(grams(oracle::m_pi), reg).value() ==
        doctest::Approx(5.409212644928752e26).epsilon(1e-12));
  CHECK(self_gravity_energy(grams(oracle::m_pi), reg).value() ==
        doctest::Approx(7.638241184873902e-84).epsilon(1e-12));

  const double m_p = oracle::planck_mass();
  CHECK(self_gravity_length(grams(m_p), reg).value() ==
        doctest::Approx(8.081275119642752e-34).epsilon(1e-12));
  CHECK(oracle::decades(self_gravity_length(grams(m_p), reg).value(), oracle::planck_length()) ==
        doctest::Approx(0.30103).epsilon(1e-5));
  CHECK(self_gravity_energy(grams(m_p), reg).value() ==
        doctest::Approx(3.912163272198214e16).epsilon(1e-12));

  CHECK(self_gravity_energy(grams(1.0), reg).dim() == Dimension::energy());
  CHECK_THROWS_AS(compton_length(grams(0.0), reg), Error);
  CHECK_THROWS_AS(schwarzschild_radius(grams(-1.0), reg), Error);
  CHECK_THROWS_AS(self_gravity_length(Quantity(1.0, Dimension::length()), reg), Error);
}

TEST_CASE("self-gravity energy times length is G m^2 (property)") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> exponent(-30.0, 0.0);
  for (int i = 0; i < 500; ++i) {
    const double m = std::pow(10.0, exponent(rng));
    const Quantity e = self_gravity_energy(grams(m), registry());
    const Quantity l = self_gravity_length(grams(m), registry());
    CHECK(oracle::rel(e.value() * l.value(), oracle::G * m * m) <= 1e-12);
    CHECK((e * l).dim() == Dimension::energy() * Dimension::length());
  }
}

TEST_CASE("fractional charge") {
  CHECK(fractional_charge(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(fractional_charge(2) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(fractional_charge(3) == 1.0);
  CHECK_THROWS_AS(fractional_charge(0), Error);
  CHECK_THROWS_AS(fractional_charge(4), Error);
  try {
    fractional_charge(4);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::kUnsupportedDimension);
  }
}

TEST_CASE("quark potential") {
  const PotentialTerms t = qcd_potential(0.5, 1.0, 0.3, 0.2);
  CHECK(t.coulombic == doctest::Approx(-0.6).epsilon(1e-15));
  CHECK(t.linear == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(t.total() == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(compton_scale_energy(2.0, 0.3, 0.2) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(compton_scale_energy(0.1, 0.3, 0.2) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(qcd_potential(0.0, 1.0, 0.3, 0.2), Error);
  CHECK_THROWS_AS(potential_zero(0.0, 0.2), Error);

  // Bisection oracle for the zero of -a/r + b r.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(0.01, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double a = coef(rng), b = coef(rng);
    double lo = 1e-6, hi = 1e6;
    for (int k = 0; k < 200; ++k) {
      const double mid = std::sqrt(lo * hi);
      (-a / mid + b * mid < 0.0 ? lo : hi) = mid;
    }
    const double r0 = potential_zero(a, b);
    CHECK(oracle::rel(r0, std::sqrt(lo * hi)) <= 1e-12);
    CHECK(std::fabs(qcd_potential(r0, 1.0, a, b).total()) <= 1e-12 * b * r0);
    CHECK(qcd_potential(0.5 * r0, 1.0, a, b).total() < 0.0);
    CHECK(qcd_potential(2.0 * r0, 1.0, a, b).total() > 0.0);
  }
}

TEST_CASE("quark coupling and mass") {
  CHECK(quark_coupling() == doctest::Approx(7.297348e-4).epsilon(1e-6));
  CHECK(quark_coupling() >= 1e-4);
  CHECK(quark_coupling() <= 1e-2);
  const Quantity mq = quark_mass_estimate(registry());
  CHECK(mq.value() == doctest::Approx(1.8218767403e-24).epsilon(1e-10));
  CHECK(mq.dim() == Dimension::mass());
  // ~1.022 GeV
  const double gev = mq.value() * oracle::c * oracle::c / 1.602176634e-3;
  CHECK(gev == doctest::Approx(1.022).epsilon(1e-3));
}

TEST_CASE("pion gravitational closure") {
  const ClosureVerdict identity = pion_gravitational_closure(registry());
  CHECK(identity.deviation_decades <= 1e-12);
  CHECK(identity.rest_energy.value() == doctest::Approx(2.2361568100079266e-4).epsilon(1e-12));
  CHECK(identity.gravitational_energy.dim() == Dimension::energy());

  const Quantity hubble_radius(oracle::c / oracle::H0, Dimension::length());
  const ClosureVerdict hubble = pion_gravitational_closure(registry(), hubble_radius, oracle::N);
  CHECK(hubble.gravitational_energy.value() == doctest::Approx(3.1284741900036245e-5).epsilon(1e-12));
  CHECK(hubble.deviation_decades == doctest::Approx(0.8541696787008074).epsilon(1e-12));
  CHECK(hubble.deviation_decades <= 1.0);
}

TEST_CASE("Planck bookkeeping") {
  const PlanckBookkeeping b = planck_bookkeeping(registry());
  CHECK(b.mass_in_compton_volume.value() == doctest::Approx(1.4567993280249296e55).epsilon(1e-12));
  CHECK(b.planck_masses == doctest::Approx(6.693513789402924e59).epsilon(1e-12));
  CHECK(b.chronon_ratio == doctest::Approx(8.74751550224322e19).epsilon(1e-12));
  CHECK(b.particles_recovered == doctest::Approx(5.855161563728085e79).epsilon(1e-12));
  CHECK(oracle::decades(b.particles_recovered, oracle::N) <= 0.5);
}

TEST_CASE("report rows are labeled and finite") {
  for (const ReportRow& row : scale_bridge_rows(registry())) {
    CHECK_FALSE(row.label.empty());
    CHECK(std::isfinite(row.value));
  }
}
