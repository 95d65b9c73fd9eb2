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

#include <cmath>

#include "fluctuverse/epoch_kernels.hpp"

namespace fluctuverse::kernels {

void derive_epochs_scalar(std::span<const double> particle_count, const EpochInputs& in,
                          const EpochColumns& out) {
  const double c2 = in.c * in.c;
  const double m2 = in.particle_mass * in.particle_mass;
  for (std::size_t i = 0; i < particle_count.size(); ++i) {
    const double n = particle_count[i];
    const double root_n = std::sqrt(n);
    const double mass = n * in.particle_mass;
    const double radius = (in.G * mass) / c2;
    const double hubble = in.c / radius;
    out.mass[i] = mass;
    out.radius[i] = radius;
    out.hubble[i] = hubble;
    out.uncertainty[i] = radius / root_n;
    out.hbar_check[i] = ((in.G * root_n) * m2) / in.c;
    out.lambda[i] = hubble * hubble;
  }
}

}  // namespace fluctuverse::kernels
