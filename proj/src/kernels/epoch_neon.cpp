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

#if defined(__aarch64__)

#include <arm_neon.h>

#include "fluctuverse/epoch_kernels.hpp"

namespace fluctuverse::kernels {

void derive_epochs_neon(std::span<const double> particle_count, const EpochInputs& in,
                        const EpochColumns& out) {
  const std::size_t n = particle_count.size();
  const double c2 = in.c * in.c;
  const double m2 = in.particle_mass * in.particle_mass;
  const float64x2_t vm = vdupq_n_f64(in.particle_mass);
  const float64x2_t vg = vdupq_n_f64(in.G);
  const float64x2_t vc = vdupq_n_f64(in.c);
  const float64x2_t vc2 = vdupq_n_f64(c2);
  const float64x2_t vm2 = vdupq_n_f64(m2);

  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t count = vld1q_f64(particle_count.data() + i);
    const float64x2_t root = vsqrtq_f64(count);
    const float64x2_t mass = vmulq_f64(count, vm);
    const float64x2_t radius = vdivq_f64(vmulq_f64(vg, mass), vc2);
    const float64x2_t hubble = vdivq_f64(vc, radius);
    vst1q_f64(out.mass.data() + i, mass);
    vst1q_f64(out.radius.data() + i, radius);
    vst1q_f64(out.hubble.data() + i, hubble);
    vst1q_f64(out.uncertainty.data() + i, vdivq_f64(radius, root));
    vst1q_f64(out.hbar_check.data() + i, vdivq_f64(vmulq_f64(vmulq_f64(vg, root), vm2), vc));
    vst1q_f64(out.lambda.data() + i, vmulq_f64(hubble, hubble));
  }
  if (i < n) {
    derive_epochs_scalar(particle_count.subspan(i), in,
                         {out.mass.subspan(i), out.radius.subspan(i), out.hubble.subspan(i),
                          out.uncertainty.subspan(i), out.hbar_check.subspan(i),
                          out.lambda.subspan(i)});
  }
}

}  // namespace fluctuverse::kernels

#endif
