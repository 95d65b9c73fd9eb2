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
#include <string_view>

namespace fluctuverse::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa);

/// True if this build contains the variant and the running CPU supports it.
bool isa_available(Isa isa);

/// Widest available variant.
Isa best_isa();

struct EpochInputs {
  double particle_mass;  // g
  double G;
  double c;
};

/// Structure-of-arrays output; every span must have the length of the input.
struct EpochColumns {
  std::span<double> mass;        // M = N m
  std::span<double> radius;      // R = G M / c^2
  std::span<double> hubble;      // H = c / R
  std::span<double> uncertainty; // l = R / sqrt(N)
  std::span<double> hbar_check;  // G sqrt(N) m^2 / c
  std::span<double> lambda;      // H^2
};

// All variants perform the same correctly rounded operations (mul, div,
// sqrt) in the same order, so their outputs are bit-identical.
void derive_epochs_scalar(std::span<const double> particle_count, const EpochInputs& in,
                          const EpochColumns& out);
#if defined(__x86_64__) || defined(_M_X64)
void derive_epochs_avx2(std::span<const double> particle_count, const EpochInputs& in,
                        const EpochColumns& out);
#endif
#if defined(__aarch64__)
void derive_epochs_neon(std::span<const double> particle_count, const EpochInputs& in,
                        const EpochColumns& out);
#endif

/// Runs the requested variant; throws std::invalid_argument if unavailable
/// or if the column lengths do not match the input.
void derive_epochs(Isa isa, std::span<const double> particle_count, const EpochInputs& in,
                   const EpochColumns& out);

}  // namespace fluctuverse::kernels
