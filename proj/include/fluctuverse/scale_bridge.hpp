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
#include <vector>

#include "fluctuverse/constants.hpp"
#include "fluctuverse/quantity.hpp"

namespace fluctuverse {

/// One labeled line for the report generator.
struct ReportRow {
  std::string label;
  double value = 0.0;
  std::string unit;
  std::string anchor;
};

struct PlanckScales {
  Quantity mass;     // (hbar c / G)^(1/2)
  Quantity length;   // hbar / (m_P c)
  Quantity time;     // l_P / c
  Quantity density;  // m_P / l_P^3
};

PlanckScales planck_scales(const ConstantsRegistry& reg);

// Mass-taking functions throw kDomainError unless m is a positive mass.
Quantity compton_length(const Quantity& m, const ConstantsRegistry& reg);
Quantity compton_time(const Quantity& m, const ConstantsRegistry& reg);
/// G m / c^2, without the textbook factor 2.
Quantity schwarzschild_radius(const Quantity& m, const ConstantsRegistry& reg);
/// hbar^2 / (2 m^3 G).
Quantity self_gravity_length(const Quantity& m, const ConstantsRegistry& reg);
/// 2 m^5 G^2 / hbar^2, equal to G m^2 / self_gravity_length(m).
Quantity self_gravity_energy(const Quantity& m, const ConstantsRegistry& reg);

/// Charge, in units of e, carried by a particle confined to d of the three
/// spatial dimensions: d/3. Throws kUnsupportedDimension outside {1, 2, 3}.
double fractional_charge(int d);

// Quark-sector quantities below are in natural units (hbar = c = 1): masses,
// energies and inverse lengths share one unit.

struct PotentialTerms {
  double coulombic = 0.0;  // -alpha / r
  double linear = 0.0;     // beta r
  double alpha = 0.0;
  double beta = 0.0;

  double total() const { return coulombic + linear; }
};

/// -alpha/r + beta r. Throws kDomainError for r <= 0 or m <= 0.
PotentialTerms qcd_potential(double r, double m, double alpha, double beta);

/// Energy scale at the Compton radius r = 1/m: max(alpha m, beta/m).
double compton_scale_energy(double m, double alpha, double beta);

/// Radius where the potential vanishes, sqrt(alpha/beta). Throws
/// kDomainError unless alpha > 0 and beta > 0.
double potential_zero(double alpha, double beta);

inline constexpr double kInverseFineStructure = 137.036;

/// A tenth of the fine-structure constant, (1/137.036)/10.
double quark_coupling();

/// 2e3 m_e.
Quantity quark_mass_estimate(const ConstantsRegistry& reg);

struct ClosureVerdict {
  Quantity gravitational_energy;  // N G m^2 / R
  Quantity rest_energy;           // m c^2
  double deviation_decades = 0.0;
};

/// Compares N G m_pi^2 / R against m_pi c^2 with R = G N m_pi / c^2, which
/// makes the two equal identically.
ClosureVerdict pion_gravitational_closure(const ConstantsRegistry& reg);
/// Same comparison with a caller-supplied radius (e.g. c/H0) and count.
ClosureVerdict pion_gravitational_closure(const ConstantsRegistry& reg, const Quantity& radius,
                                          double particle_count);

struct PlanckBookkeeping {
  Quantity mass_in_compton_volume;  // rho_P l^3, l the pion Compton length
  double planck_masses = 0.0;       // rho_P l^3 / m_P
  double chronon_ratio = 0.0;       // tau_pion / tau_P
  double particles_recovered = 0.0; // planck_masses * chronon_ratio
};

PlanckBookkeeping planck_bookkeeping(const ConstantsRegistry& reg);

std::vector<ReportRow> scale_bridge_rows(const ConstantsRegistry& reg);

}  // namespace fluctuverse
