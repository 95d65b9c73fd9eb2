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

#include "fluctuverse/error.hpp"

namespace fluctuverse {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kOverflow: return "Overflow";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kDomainError: return "DomainError";
    case ErrorKind::kLexError: return "LexError";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kUnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::kNegativeTime: return "NegativeTime";
    case ErrorKind::kInvalidSteps: return "InvalidSteps";
    case ErrorKind::kEmptySeries: return "EmptySeries";
    case ErrorKind::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::kInsufficientSamples: return "InsufficientSamples";
    case ErrorKind::kConstantsError: return "ConstantsError";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Error";
}

}  // namespace fluctuverse
