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

#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "fluctuverse/constants.hpp"
#include "fluctuverse/epoch_kernels.hpp"
#include "fluctuverse/quantity.hpp"

namespace fluctuverse {

/// How the creation law dN/dt = sqrt(N)/tau is closed.
///  kExact:       sqrt(N) = t/(2 tau), the integral from N(0) = 0.
///  kPaperStated: sqrt(N) = 2 t/tau, the published closed form (16x more N).
enum class CreationVariant { kExact, kPaperStated };

std::string_view to_string(CreationVariant v);

struct CosmoParams {
  Quantity particle_mass;  // typically m_pi
  double n_target = 1e80;
  CreationVariant variant = CreationVariant::kExact;

  /// Defaults: m_pi and N from the registry, exact variant.
  static CosmoParams defaults(const ConstantsRegistry& reg);

  /// Compton time hbar/(m c^2), recomputed on every call.
  Quantity tau(const ConstantsRegistry& reg) const;
};

struct EpochState {
  Quantity t;              // s
  double particle_count;   // N
  Quantity mass;           // M = N m
  Quantity radius;         // R = G M / c^2
  Quantity hubble;         // c / R
  Quantity uncertainty;    // R / sqrt(N)
  Quantity hbar_check;     // G sqrt(N) m^2 / c
  Quantity lambda_bound;   // H^2
};

class CosmoModel {
 public:
  /// Throws kDomainError for a non-positive or non-mass particle mass, or
  /// non-positive n_target.
  CosmoModel(ConstantsRegistry reg, CosmoParams params);

  const CosmoParams& params() const { return params_; }
  const ConstantsRegistry& registry() const { return reg_; }
  double tau_seconds() const { return tau_; }

  /// Closed-form sqrt(N) at time t for the active variant. Throws
  /// kNegativeTime for t < 0.
  double sqrt_n_closed(const Quantity& t) const;

  /// RK4 integration of u = sqrt(N) from t = 0 on a uniform grid; returns the
  /// states at t_k = k t_end / steps, k = 1..steps. Throws kNegativeTime for
  /// t_end <= 0 and kInvalidSteps for steps < 2.
  std::vector<EpochState> evolve(const Quantity& t_end, int steps,
                                 kernels::Isa isa = kernels::best_isa()) const;

  /// State at which N reaches n_target under the active variant.
  EpochState present_epoch() const;

  /// Derived state for a given (t, N) pair.
  EpochState derive_state(double t_seconds, double particle_count) const;

 private:
  double creation_rate() const;  // du/dt

  ConstantsRegistry reg_;
  CosmoParams params_;
  double tau_ = 0.0;
};

/// True iff R strictly increases and H strictly decreases along the series.
/// Throws kEmptySeries for an empty series and kDomainError if t is not
/// strictly increasing.
bool check_expansion(std::span<const EpochState> series);

/// Columns: t_s, N, M_g, R_cm, H_per_s, l_cm, hbar_check_erg_s,
/// lambda_bound_per_s2; 9 significant digits.
void write_epochs_csv(std::ostream& os, std::span<const EpochState> series);

}  // namespace fluctuverse
