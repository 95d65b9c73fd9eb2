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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fluctuverse/quantity.hpp"

namespace fluctuverse {

struct ConstantEntry {
  std::string name;
  Quantity quantity;
  std::string provenance;
  bool derived = false;
};

/// Names every sealed registry must define.
inline constexpr std::string_view kRequiredConstants[] = {"hbar", "c", "G", "e", "m_e",
                                                          "m_pi", "k_B", "H0", "N"};

/// Names computed at seal time from the base constants; a constants file may
/// not assign them.
inline constexpr std::string_view kDerivedConstants[] = {"m_P", "l_P", "tau_P", "rho_P", "pi"};

/// Immutable name -> Quantity table. Built with ConstantsRegistry::Builder,
/// then sealed; a sealed registry is a plain value and safe to share across
/// threads.
class ConstantsRegistry {
 public:
  class Builder {
   public:
    /// Adds or replaces an entry. Order of first insertion is kept.
    Builder& set(std::string name, Quantity q, std::string provenance);
    /// Applies every line of a constants file; later lines override earlier ones.
    Builder& load(std::string_view source, std::string_view origin);
    /// Checks the required set and appends the derived Planck entries.
    ConstantsRegistry seal() &&;

   private:
    std::vector<ConstantEntry> entries_;
  };

  /// Embedded defaults, sealed.
  static ConstantsRegistry defaults();
  /// Embedded defaults overridden by a constants file on disk.
  static ConstantsRegistry with_overrides_from_file(const std::string& path);

  const Quantity* find(std::string_view name) const;
  /// Throws Error(kUnknownIdentifier).
  const Quantity& at(std::string_view name) const;
  double value(std::string_view name) const { return at(name).value(); }
  const ConstantEntry* entry(std::string_view name) const;

  const std::vector<ConstantEntry>& entries() const { return entries_; }

 private:
  explicit ConstantsRegistry(std::vector<ConstantEntry> entries);

  std::vector<ConstantEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// One parsed `name = <decimal> <unit-expr>` line.
struct ConstantLine {
  std::string name;
  Quantity quantity;
  std::string note;
  std::size_t line = 0;
};

/// Parses a constants file. Throws Error(kConstantsError) with line numbers.
std::vector<ConstantLine> parse_constants(std::string_view source);

/// The embedded default constants file text.
std::string_view embedded_constants();

}  // namespace fluctuverse
