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

#include <span>
#include <utility>
#include <vector>

#include "fluctuverse/scale_bridge.hpp"

namespace fluctuverse {

inline constexpr double kBoltzmannCgs = 1.380649e-16;  // erg/K
inline constexpr double kPlanckCgs = 6.62607015e-27;   // erg s

/// Oscillator quantum g(nu) = a nu^p (erg). Linear is p = 1.
class SpectrumForm {
 public:
  /// Throws kDomainError unless a > 0.
  static SpectrumForm linear(double a);
  /// Throws kDomainError unless a > 0 and p >= 0.
  static SpectrumForm power_law(double a, double p);

  double coefficient() const { return a_; }
  double exponent() const { return p_; }
  double quantum(double nu) const;

 private:
  SpectrumForm(double a, double p) : a_(a), p_(p) {}
  double a_;
  double p_;
};

/// Boltzmann average over the ladder E_n = n g(nu): g / (exp(g/kT) - 1).
/// Uses g exp(-g/kT) once g/kT > 700 and the series kT (1 - x/2 + x^2/12)
/// once g/kT < 1e-8. Throws kDomainError for nu <= 0 or T <= 0.
double mean_mode_energy(const SpectrumForm& form, double nu, double temperature,
                        double boltzmann = kBoltzmannCgs);

/// Relative violation of f(lambda nu, lambda T) = lambda f(nu, T).
double wien_scaling_residual(const SpectrumForm& form, double nu, double temperature, double lambda,
                             double boltzmann = kBoltzmannCgs);

struct Sample {
  double nu;
  double temperature;
};

inline constexpr double kWienCompatibleResidual = 1e-9;
inline constexpr double kWienScaleFactors[] = {0.5, 2.0, 10.0};

struct LawVerdict {
  bool wien_compatible = false;
  double max_residual = 0.0;
  double min_residual = 0.0;
};

/// wien_compatible iff every sample's residual at every factor in
/// kWienScaleFactors is within kWienCompatibleResidual. Throws
/// kInsufficientSamples for fewer than 3 samples.
LawVerdict classify_law(const SpectrumForm& form, std::span<const Sample> samples,
                        double boltzmann = kBoltzmannCgs);

/// 3 x 3 grid around the optical band: nu in {5e13, 1e14, 2e14} Hz,
/// T in {2500, 5000, 10000} K, where g/kT stays of order one.
std::vector<Sample> shipped_sample_grid();

/// Coefficient giving a nu^p the same quantum as h nu at nu = 1e14 Hz.
double matched_coefficient(double p);

/// Smallest residual a non-linear form shows on the shipped grid (checked
/// for p in {0.5, 1.5, 2, 3}).
inline constexpr double kWienViolationThreshold = 0.02;

std::vector<ReportRow> planck_law_rows(const ConstantsRegistry& reg);

}  // namespace fluctuverse
