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

#include "fluctuverse/cosmology.hpp"

#include <cmath>
#include <cstdio>

#include "fluctuverse/error.hpp"

namespace fluctuverse {

std::string_view to_string(CreationVariant v) {
  return v == CreationVariant::kExact ? "exact" : "paper";
}

CosmoParams CosmoParams::defaults(const ConstantsRegistry& reg) {
  return {reg.at("m_pi"), reg.value("N"), CreationVariant::kExact};
}

Quantity CosmoParams::tau(const ConstantsRegistry& reg) const {
  const Quantity& c = reg.at("c");
  return reg.at("hbar") / (particle_mass * c * c);
}

CosmoModel::CosmoModel(ConstantsRegistry reg, CosmoParams params)
    : reg_(std::move(reg)), params_(std::move(params)) {
  if (params_.particle_mass.dim() != Dimension::mass() || params_.particle_mass.value() <= 0.0) {
    throw Error(ErrorKind::kDomainError, "particle mass must be a positive mass");
  }
  if (!(params_.n_target > 0.0) || !std::isfinite(params_.n_target)) {
    throw Error(ErrorKind::kDomainError, "target particle count must be positive");
  }
  tau_ = params_.tau(reg_).value();
}

double CosmoModel::creation_rate() const {
  return params_.variant == CreationVariant::kExact ? 1.0 / (2.0 * tau_) : 2.0 / tau_;
}

double CosmoModel::sqrt_n_closed(const Quantity& t) const {
  if (t.dim() != Dimension::time()) {
    throw Error(ErrorKind::kDimensionMismatch, "time must be in seconds, got " + t.dim().to_unit_string());
  }
  if (t.value() < 0.0) throw Error(ErrorKind::kNegativeTime, "t = " + format_sig5(t.value()) + " s");
  return params_.variant == CreationVariant::kExact ? t.value() / (2.0 * tau_)
                                                    : 2.0 * t.value() / tau_;
}

std::vector<EpochState> CosmoModel::evolve(const Quantity& t_end, int steps, kernels::Isa isa) const {
  if (t_end.dim() != Dimension::time()) {
    throw Error(ErrorKind::kDimensionMismatch, "t_end must be in seconds");
  }
  if (!(t_end.value() > 0.0)) {
    throw Error(ErrorKind::kNegativeTime, "t_end must be positive, got " + format_sig5(t_end.value()));
  }
  if (steps < 2) throw Error(ErrorKind::kInvalidSteps, "steps must be at least 2, got " + std::to_string(steps));

  const double rate = creation_rate();
  // du/dt for u = sqrt(N); constant in both variants, kept as a function so
  // the stepper stays a plain RK4.
  auto rhs = [rate](double /*t*/, double /*u*/) { return rate; };

  const auto n = static_cast<std::size_t>(steps);
  const double h = t_end.value() / static_cast<double>(steps);
  std::vector<double> times(n), counts(n);
  double u = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * h;
    const double k1 = rhs(t, u);
    const double k2 = rhs(t + 0.5 * h, u + 0.5 * h * k1);
    const double k3 = rhs(t + 0.5 * h, u + 0.5 * h * k2);
    const double k4 = rhs(t + h, u + h * k3);
    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    times[k] = static_cast<double>(k + 1) * h;
    counts[k] = u * u;
  }

  std::vector<double> mass(n), radius(n), hubble(n), uncertainty(n), hbar_check(n), lambda(n);
  kernels::derive_epochs(isa, counts,
                         {params_.particle_mass.value(), reg_.value("G"), reg_.value("c")},
                         {mass, radius, hubble, uncertainty, hbar_check, lambda});

  const Dimension s = Dimension::time();
  std::vector<EpochState> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back({Quantity(times[k], s), counts[k], Quantity(mass[k], Dimension::mass()),
                   Quantity(radius[k], Dimension::length()), Quantity(hubble[k], s.inverse()),
                   Quantity(uncertainty[k], Dimension::length()),
                   Quantity(hbar_check[k], Dimension::energy() * s),
                   Quantity(lambda[k], s.pow(Rational(-2)))});
  }
  return out;
}

EpochState CosmoModel::present_epoch() const {
  const double root = std::sqrt(params_.n_target);
  const double t = params_.variant == CreationVariant::kExact ? 2.0 * tau_ * root : 0.5 * tau_ * root;
  return derive_state(t, params_.n_target);
}

EpochState CosmoModel::derive_state(double t_seconds, double particle_count) const {
  double mass = 0, radius = 0, hubble = 0, uncertainty = 0, hbar_check = 0, lambda = 0;
  const double count[] = {particle_count};
  kernels::derive_epochs_scalar(count, {params_.particle_mass.value(), reg_.value("G"), reg_.value("c")},
                                {{&mass, 1}, {&radius, 1}, {&hubble, 1}, {&uncertainty, 1},
                                 {&hbar_check, 1}, {&lambda, 1}});
  const Dimension s = Dimension::time();
  return {Quantity(t_seconds, s),
          particle_count,
          Quantity(mass, Dimension::mass()),
          Quantity(radius, Dimension::length()),
          Quantity(hubble, s.inverse()),
          Quantity(uncertainty, Dimension::length()),
          Quantity(hbar_check, Dimension::energy() * s),
          Quantity(lambda, s.pow(Rational(-2)))};
}

bool check_expansion(std::span<const EpochState> series) {
  if (series.empty()) throw Error(ErrorKind::kEmptySeries, "no epoch states");
  bool expanding = true;
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (!(series[i].t.value() > series[i - 1].t.value())) {
      throw Error(ErrorKind::kDomainError, "epoch times must strictly increase");
    }
    expanding = expanding && series[i].radius.value() > series[i - 1].radius.value() &&
                series[i].hubble.value() < series[i - 1].hubble.value();
  }
  return expanding;
}

void write_epochs_csv(std::ostream& os, std::span<const EpochState> series) {
  os << "t_s,N,M_g,R_cm,H_per_s,l_cm,hbar_check_erg_s,lambda_bound_per_s2\n";
  char buf[32];
  auto field = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return std::string(buf);
  };
  for (const auto& s : series) {
    os << field(s.t.value()) << ',' << field(s.particle_count) << ',' << field(s.mass.value()) << ','
       << field(s.radius.value()) << ',' << field(s.hubble.value()) << ','
       << field(s.uncertainty.value()) << ',' << field(s.hbar_check.value()) << ','
       << field(s.lambda_bound.value()) << '\n';
  }
}

}  // namespace fluctuverse
