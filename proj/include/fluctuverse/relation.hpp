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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fluctuverse/constants.hpp"
#include "fluctuverse/parser.hpp"

namespace fluctuverse {

struct Relation {
  std::string id;
  std::string description;
  ExprPtr lhs;
  ExprPtr rhs;
  Comparator comparator = Comparator::kApprox;
  double tolerance_decades = 1.0;
  std::string ref;

  std::string expression_source() const;
};

struct RelationResult {
  std::string id;
  Comparator comparator = Comparator::kApprox;
  double tolerance_decades = 1.0;
  std::optional<Quantity> lhs_value;
  std::optional<Quantity> rhs_value;
  std::optional<double> deviation_decades;
  bool dim_consistent = false;
  bool passed = false;
  std::string note;  // why a check could not be completed, if it couldn't
};

/// Reads the corpus format:
///
///   [relation eq9.weinberg]
///   desc = "pion mass from the Hubble rate"
///   expr = "m_pi ~ cbrt(hbar^2*H0/(G*c))"
///   tol  = 1.0
///   ref  = "..."
///
/// Throws kParseError (naming the section) or kDuplicateId.
std::vector<Relation> parse_relation_file(std::string_view source);

/// The corpus shipped inside the library.
std::string_view embedded_corpus();

/// Evaluates one relation. Dimension problems and non-positive sides are
/// reported in the result, never thrown; only kUnknownIdentifier escapes.
/// tol_scale multiplies the relation's tolerance.
RelationResult check_relation(const Relation& rel, const ConstantsRegistry& reg,
                              double tol_scale = 1.0);

/// Checks a corpus, concurrently when it is large enough to bother. Results
/// are in corpus order.
std::vector<RelationResult> check_corpus(std::span<const Relation> corpus,
                                         const ConstantsRegistry& reg, double tol_scale = 1.0);

}  // namespace fluctuverse
