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

#include "fluctuverse/constants.hpp"
#include "fluctuverse/cosmology.hpp"
#include "fluctuverse/relation.hpp"

namespace fluctuverse {

enum class OutputFormat { kText, kJson, kCsv };

inline constexpr int kJsonSchemaVersion = 1;

/// One row per relation: id, lhs, rhs, deviation, tol, PASS/FAIL, ref.
void render_verify(std::ostream& os, std::span<const Relation> corpus,
                   std::span<const RelationResult> results, OutputFormat format);

/// Epoch series as CSV (text and csv formats) or a JSON array.
void render_epochs(std::ostream& os, std::span<const EpochState> series, OutputFormat format);

/// Full document: constants with provenance, relation verdicts grouped by
/// anchor, scale-bridge rows, Planck-law rows, present epoch. JSON output is
/// a single object with schema_version, constants, relations, scales,
/// planck_law and epoch.
void render_report(std::ostream& os, const ConstantsRegistry& reg, std::span<const Relation> corpus,
                   std::span<const RelationResult> results, const EpochState& epoch,
                   OutputFormat format);

}  // namespace fluctuverse
