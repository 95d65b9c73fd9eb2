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

#include <stdexcept>
#include <string>

#include "fluctuverse/epoch_kernels.hpp"

namespace fluctuverse::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  static const Isa best = [] {
    if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
    if (isa_available(Isa::kNeon)) return Isa::kNeon;
    return Isa::kScalar;
  }();
  return best;
}

void derive_epochs(Isa isa, std::span<const double> particle_count, const EpochInputs& in,
                   const EpochColumns& out) {
  const std::size_t n = particle_count.size();
  if (out.mass.size() != n || out.radius.size() != n || out.hubble.size() != n ||
      out.uncertainty.size() != n || out.hbar_check.size() != n || out.lambda.size() != n) {
    throw std::invalid_argument("epoch column length does not match input length");
  }
  if (!isa_available(isa)) {
    throw std::invalid_argument("kernel variant '" + std::string(to_string(isa)) + "' unavailable");
  }
  switch (isa) {
    case Isa::kScalar:
      derive_epochs_scalar(particle_count, in, out);
      return;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      derive_epochs_avx2(particle_count, in, out);
#endif
      return;
    case Isa::kNeon:
#if defined(__aarch64__)
      derive_epochs_neon(particle_count, in, out);
#endif
      return;
  }
}

}  // namespace fluctuverse::kernels
