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

#include "fluctuverse/planck_law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fluctuverse/error.hpp"

namespace fluctuverse {

SpectrumForm SpectrumForm::linear(double a) { return power_law(a, 1.0); }

SpectrumForm SpectrumForm::power_law(double a, double p) {
  if (!(a > 0.0) || !std::isfinite(a)) throw Error(ErrorKind::kDomainError, "spectrum coefficient must be positive");
  if (!(p >= 0.0) || !std::isfinite(p)) throw Error(ErrorKind::kDomainError, "spectrum exponent must be >= 0");
  return {a, p};
}

double SpectrumForm::quantum(double nu) const {
  return p_ == 1.0 ? a_ * nu : a_ * std::pow(nu, p_);
}

double mean_mode_energy(const SpectrumForm& form, double nu, double temperature, double boltzmann) {
  if (!(nu > 0.0)) throw Error(ErrorKind::kDomainError, "frequency must be positive");
  if (!(temperature > 0.0)) throw Error(ErrorKind::kDomainError, "temperature must be positive");
  const double g = form.quantum(nu);
  const double kt = boltzmann * temperature;
  const double x = g / kt;
  if (x > 700.0) return g * std::exp(-x);
  if (x < 1e-8) return kt * (1.0 - x / 2.0 + x * x / 12.0);
  return g / std::expm1(x);
}

double wien_scaling_residual(const SpectrumForm& form, double nu, double temperature, double lambda,
                             double boltzmann) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::kDomainError, "scale factor must be positive");
  if (lambda == 1.0) return 0.0;
  const double base = lambda * mean_mode_energy(form, nu, temperature, boltzmann);
  const double scaled = mean_mode_energy(form, lambda * nu, lambda * temperature, boltzmann);
  if (base == 0.0) return scaled == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::fabs(scaled - base) / base;
}

LawVerdict classify_law(const SpectrumForm& form, std::span<const Sample> samples, double boltzmann) {
  if (samples.size() < 3) {
    throw Error(ErrorKind::kInsufficientSamples,
                "need at least 3 samples, got " + std::to_string(samples.size()));
  }
  LawVerdict v;
  v.min_residual = std::numeric_limits<double>::infinity();
  for (const Sample& s : samples) {
    for (double lambda : kWienScaleFactors) {
      const double r = wien_scaling_residual(form, s.nu, s.temperature, lambda, boltzmann);
      v.max_residual = std::max(v.max_residual, r);
      v.min_residual = std::min(v.min_residual, r);
    }
  }
  v.wien_compatible = v.max_residual <= kWienCompatibleResidual;
  return v;
}

std::vector<Sample> shipped_sample_grid() {
  std::vector<Sample> grid;
  for (double nu : {5e13, 1e14, 2e14}) {
    for (double t : {2500.0, 5000.0, 10000.0}) grid.push_back({nu, t});
  }
  return grid;
}

double matched_coefficient(double p) { return kPlanckCgs * std::pow(1e14, 1.0 - p); }

std::vector<ReportRow> planck_law_rows(const ConstantsRegistry& reg) {
  const double k = reg.value("k_B");
  const double h = 2.0 * std::numbers::pi * reg.value("hbar");
  const SpectrumForm linear = SpectrumForm::linear(h);
  const auto grid = shipped_sample_grid();

  std::vector<ReportRow> rows;
  rows.push_back({"mean_mode_energy(nu=1e14 Hz, T=5000 K)", mean_mode_energy(linear, 1e14, 5000.0, k), "erg",
                  "oscillator law"});
  // Frequency putting g/kT at 1e-6 and 30 for T = 300 K.
  const double t = 300.0;
  const double nu_rj = 1e-6 * k * t / h;
  const double nu_wien = 30.0 * k * t / h;
  rows.push_back({"rayleigh_jeans_rel_error(x=1e-6)",
                  std::fabs(mean_mode_energy(linear, nu_rj, t, k) - k * t) / (k * t), "", "oscillator law"});
  const double f_wien = mean_mode_energy(linear, nu_wien, t, k);
  const double g_wien = linear.quantum(nu_wien);
  rows.push_back({"wien_tail_rel_error(x=30)", std::fabs(f_wien - g_wien * std::exp(-g_wien / (k * t))) / f_wien,
                  "", "oscillator law"});
  for (double p : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    const LawVerdict v = classify_law(SpectrumForm::power_law(matched_coefficient(p), p), grid, k);
    const std::string tag = "p=" + std::string(p == 0.5 ? "0.5" : p == 1.5 ? "1.5" : std::to_string(static_cast<int>(p)));
    rows.push_back({"wien_max_residual(" + tag + ")", v.max_residual, "", "oscillator law"});
    rows.push_back({"wien_compatible(" + tag + ")", v.wien_compatible ? 1.0 : 0.0, "", "oscillator law"});
  }
  return rows;
}

}  // namespace fluctuverse
