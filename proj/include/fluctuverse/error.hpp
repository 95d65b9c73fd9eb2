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

#include <stdexcept>
#include <string>
#include <string_view>

namespace fluctuverse {

enum class ErrorKind {
  kOverflow,
  kDivisionByZero,
  kDimensionMismatch,
  kDomainError,
  kLexError,
  kParseError,
  kDuplicateId,
  kUnknownIdentifier,
  kNegativeTime,
  kInvalidSteps,
  kEmptySeries,
  kUnsupportedDimension,
  kInsufficientSamples,
  kConstantsError,
  kIoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the engine. what() is prefixed with the kind name so
// diagnostics printed by the CLI always name the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace fluctuverse
