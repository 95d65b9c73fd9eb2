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

// Independent reference arithmetic for the tests: plain doubles and the
// textbook formulas, with no use of the library's Quantity, parser, registry
// or kernels. Frozen expected values in the tests were produced this way.

#include <cmath>

namespace oracle {

inline constexpr double hbar = 1.054571817e-27;
inline constexpr double c = 2.99792458e10;
inline constexpr double G = 6.67430e-8;
inline constexpr double e = 4.80320471e-10;
inline constexpr double m_e = 9.1093837015e-28;
inline constexpr double m_pi = 2.48806e-25;
inline constexpr double k_B = 1.380649e-16;
inline constexpr double H0 = 2.27e-18;
inline constexpr double N = 1e80;

inline double decades(double a, double b) { return std::fabs(std::log10(a / b)); }
inline double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

inline double planck_mass() { return std::sqrt(hbar * c / G); }
inline double planck_length() { return hbar / (planck_mass() * c); }
inline double planck_time() { return planck_length() / c; }
inline double planck_density() { return planck_mass() / std::pow(planck_length(), 3); }
inline double compton_length(double m) { return hbar / (m * c); }
inline double compton_time(double m) { return hbar / (m * c * c); }
inline double self_gravity_length(double m) { return hbar * hbar / (2 * m * m * m * G); }
inline double self_gravity_energy(double m) { return 2 * std::pow(m, 5) * G * G / (hbar * hbar); }
inline double universe_radius() { return G * N * m_pi / (c * c); }

// Direct sum over the oscillator ladder E_n = n g, truncated when the terms
// vanish. Independent of the closed form g/(exp(g/kT) - 1).
inline double ladder_mean_energy(double g, double kt) {
  double num = 0.0, den = 0.0;
  for (int n = 0; n < 200000; ++n) {
    const double w = std::exp(-n * g / kt);
    num += n * g * w;
    den += w;
    if (w < 1e-300 || (n > 10 && w < 1e-18 * den)) break;
  }
  return num / den;
}

}  // namespace oracle
