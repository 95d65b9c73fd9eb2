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

#include "fluctuverse/scale_bridge.hpp"

#include <algorithm>
#include <cmath>

#include "fluctuverse/error.hpp"

namespace fluctuverse {
namespace {

void require_mass(const Quantity& m) {
  if (m.dim() != Dimension::mass()) {
    throw Error(ErrorKind::kDimensionMismatch, "expected a mass, got " + m.dim().to_vector_string());
  }
  if (m.value() <= 0.0) throw Error(ErrorKind::kDomainError, "mass must be positive");
}

}  // namespace

PlanckScales planck_scales(const ConstantsRegistry& reg) {
  const Quantity& hbar = reg.at("hbar");
  const Quantity& c = reg.at("c");
  const Quantity& G = reg.at("G");
  PlanckScales p;
  p.mass = pow(hbar * c / G, Rational(1, 2));
  p.length = hbar / (p.mass * c);
  p.time = p.length / c;
  p.density = p.mass / pow(p.length, Rational(3));
  return p;
}

Quantity compton_length(const Quantity& m, const ConstantsRegistry& reg) {
  require_mass(m);
  return reg.at("hbar") / (m * reg.at("c"));
}

Quantity compton_time(const Quantity& m, const ConstantsRegistry& reg) {
  require_mass(m);
  const Quantity& c = reg.at("c");
  return reg.at("hbar") / (m * c * c);
}

Quantity schwarzschild_radius(const Quantity& m, const ConstantsRegistry& reg) {
  require_mass(m);
  const Quantity& c = reg.at("c");
  return reg.at("G") * m / (c * c);
}

Quantity self_gravity_length(const Quantity& m, const ConstantsRegistry& reg) {
  require_mass(m);
  const Quantity& hbar = reg.at("hbar");
  return hbar * hbar / (2.0 * pow(m, Rational(3)) * reg.at("G"));
}

Quantity self_gravity_energy(const Quantity& m, const ConstantsRegistry& reg) {
  require_mass(m);
  const Quantity& G = reg.at("G");
  const Quantity& hbar = reg.at("hbar");
  return 2.0 * pow(m, Rational(5)) * G * G / (hbar * hbar);
}

double fractional_charge(int d) {
  if (d < 1 || d > 3) {
    throw Error(ErrorKind::kUnsupportedDimension, "d = " + std::to_string(d) + ", expected 1, 2 or 3");
  }
  return static_cast<double>(d) / 3.0;
}

PotentialTerms qcd_potential(double r, double m, double alpha, double beta) {
  if (!(r > 0.0)) throw Error(ErrorKind::kDomainError, "r must be positive");
  if (!(m > 0.0)) throw Error(ErrorKind::kDomainError, "m must be positive");
  return {-alpha / r, beta * r, alpha, beta};
}

double compton_scale_energy(double m, double alpha, double beta) {
  const PotentialTerms t = qcd_potential(1.0 / m, m, alpha, beta);
  return std::max(std::fabs(t.coulombic), t.linear);
}

double potential_zero(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw Error(ErrorKind::kDomainError, "potential zero needs alpha > 0 and beta > 0");
  }
  return std::sqrt(alpha / beta);
}

double quark_coupling() { return (1.0 / kInverseFineStructure) / 10.0; }

Quantity quark_mass_estimate(const ConstantsRegistry& reg) { return 2e3 * reg.at("m_e"); }

ClosureVerdict pion_gravitational_closure(const ConstantsRegistry& reg) {
  const double n = reg.value("N");
  const Quantity radius = schwarzschild_radius(n * reg.at("m_pi"), reg);
  return pion_gravitational_closure(reg, radius, n);
}

ClosureVerdict pion_gravitational_closure(const ConstantsRegistry& reg, const Quantity& radius,
                                          double particle_count) {
  const Quantity& m = reg.at("m_pi");
  const Quantity& c = reg.at("c");
  ClosureVerdict v;
  v.gravitational_energy = particle_count * (reg.at("G") * m * m / radius);
  v.rest_energy = m * c * c;
  v.deviation_decades = decades_deviation(v.gravitational_energy, v.rest_energy);
  return v;
}

PlanckBookkeeping planck_bookkeeping(const ConstantsRegistry& reg) {
  const PlanckScales p = planck_scales(reg);
  const Quantity& m_pi = reg.at("m_pi");
  const Quantity l = compton_length(m_pi, reg);
  PlanckBookkeeping b;
  b.mass_in_compton_volume = p.density * pow(l, Rational(3));
  b.planck_masses = (b.mass_in_compton_volume / p.mass).value();
  b.chronon_ratio = (compton_time(m_pi, reg) / p.time).value();
  b.particles_recovered = b.planck_masses * b.chronon_ratio;
  return b;
}

std::vector<ReportRow> scale_bridge_rows(const ConstantsRegistry& reg) {
  const PlanckScales p = planck_scales(reg);
  const Quantity& m_pi = reg.at("m_pi");
  const Quantity& c = reg.at("c");
  const Quantity h0_radius = c / reg.at("H0");
  const ClosureVerdict closure = pion_gravitational_closure(reg);
  const ClosureVerdict closure_h0 = pion_gravitational_closure(reg, h0_radius, reg.value("N"));
  const PlanckBookkeeping book = planck_bookkeeping(reg);
  const double m_natural = 1.0;

  auto row = [](std::string label, const Quantity& q, std::string anchor) {
    return ReportRow{std::move(label), q.value(), q.dim().to_unit_string(), std::move(anchor)};
  };
  auto plain = [](std::string label, double v, std::string anchor) {
    return ReportRow{std::move(label), v, "", std::move(anchor)};
  };

  std::vector<ReportRow> rows;
  rows.push_back(row("compton_length(m_pi)", compton_length(m_pi, reg), "compton scale"));
  rows.push_back(row("compton_time(m_pi)", compton_time(m_pi, reg), "compton scale"));
  rows.push_back(row("schwarzschild_radius(m_pi)", schwarzschild_radius(m_pi, reg), "compton scale"));
  rows.push_back(row("planck_mass", p.mass, "planck scale"));
  rows.push_back(row("planck_length", p.length, "planck scale"));
  rows.push_back(row("planck_time", p.time, "planck scale"));
  rows.push_back(row("planck_density", p.density, "planck scale"));
  rows.push_back(row("schwarzschild_radius(m_P)", schwarzschild_radius(p.mass, reg), "planck scale"));
  rows.push_back(row("compton_length(m_P)", compton_length(p.mass, reg), "planck scale"));
  rows.push_back(plain("G*m_P^2/e^2", (reg.at("G") * p.mass * p.mass / (reg.at("e") * reg.at("e"))).value(),
                       "planck scale"));
  rows.push_back(row("self_gravity_energy(m_P)", self_gravity_energy(p.mass, reg), "self-gravity"));
  rows.push_back(row("m_P*c^2", p.mass * c * c, "self-gravity"));
  rows.push_back(row("self_gravity_length(m_P)", self_gravity_length(p.mass, reg), "self-gravity"));
  rows.push_back(row("self_gravity_energy(m_pi)", self_gravity_energy(m_pi, reg), "self-gravity"));
  rows.push_back(row("self_gravity_length(m_pi)", self_gravity_length(m_pi, reg), "self-gravity"));
  rows.push_back(plain("closure_deviation_decades(R=GM/c^2)", closure.deviation_decades, "closure"));
  rows.push_back(plain("closure_deviation_decades(R=c/H0)", closure_h0.deviation_decades, "closure"));
  rows.push_back(row("mass_in_compton_volume", book.mass_in_compton_volume, "planck bookkeeping"));
  rows.push_back(plain("planck_masses_in_compton_volume", book.planck_masses, "planck bookkeeping"));
  rows.push_back(plain("chronon_ratio", book.chronon_ratio, "planck bookkeeping"));
  rows.push_back(plain("particles_recovered", book.particles_recovered, "planck bookkeeping"));
  rows.push_back(plain("fractional_charge(1)", fractional_charge(1), "quark sector"));
  rows.push_back(plain("fractional_charge(2)", fractional_charge(2), "quark sector"));
  rows.push_back(plain("fractional_charge(3)", fractional_charge(3), "quark sector"));
  rows.push_back(plain("quark_coupling", quark_coupling(), "quark sector"));
  rows.push_back(row("quark_mass_estimate", quark_mass_estimate(reg), "quark sector"));
  rows.push_back(plain("compton_scale_energy(m=1, alpha=1, beta=m^2) [natural]",
                       compton_scale_energy(m_natural, 1.0, m_natural * m_natural), "quark sector"));
  rows.push_back(plain("potential_zero(alpha=1, beta=m^2) [natural]",
                       potential_zero(1.0, m_natural * m_natural), "quark sector"));
  return rows;
}

}  // namespace fluctuverse
