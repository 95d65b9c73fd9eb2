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

#include "fluctuverse/constants.hpp"
#include "fluctuverse/expr.hpp"
#include "fluctuverse/quantity.hpp"

namespace fluctuverse {

/// Static dimension of an expression. `+`/`-` need equal operand dimensions;
/// exp and ln need dimensionless arguments. Throws kDimensionMismatch naming
/// the offending subtree, or kUnknownIdentifier.
Dimension infer_dimension(const Expr& e, const ConstantsRegistry& reg);

/// Evaluates over the registry. The result's dimension always equals
/// infer_dimension(e, reg). Errors name the subtree where they arose.
Quantity evaluate(const Expr& e, const ConstantsRegistry& reg);

}  // namespace fluctuverse
