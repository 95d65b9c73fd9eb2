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

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "fluctuverse/epoch_kernels.hpp"

namespace fluctuverse::kernels {

__attribute__((target("avx2"))) void derive_epochs_avx2(std::span<const double> particle_count,
                                                        const EpochInputs& in,
                                                        const EpochColumns& out) {
  const std::size_t n = particle_count.size();
  const double c2 = in.c * in.c;
  const double m2 = in.particle_mass * in.particle_mass;
  const __m256d vm = _mm256_set1_pd(in.particle_mass);
  const __m256d vg = _mm256_set1_pd(in.G);
  const __m256d vc = _mm256_set1_pd(in.c);
  const __m256d vc2 = _mm256_set1_pd(c2);
  const __m256d vm2 = _mm256_set1_pd(m2);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d count = _mm256_loadu_pd(particle_count.data() + i);
    const __m256d root = _mm256_sqrt_pd(count);
    const __m256d mass = _mm256_mul_pd(count, vm);
    const __m256d radius = _mm256_div_pd(_mm256_mul_pd(vg, mass), vc2);
    const __m256d hubble = _mm256_div_pd(vc, radius);
    _mm256_storeu_pd(out.mass.data() + i, mass);
    _mm256_storeu_pd(out.radius.data() + i, radius);
    _mm256_storeu_pd(out.hubble.data() + i, hubble);
    _mm256_storeu_pd(out.uncertainty.data() + i, _mm256_div_pd(radius, root));
    _mm256_storeu_pd(out.hbar_check.data() + i,
                     _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(vg, root), vm2), vc));
    _mm256_storeu_pd(out.lambda.data() + i, _mm256_mul_pd(hubble, hubble));
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
