// Copyright 2026 The steinerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace steinerlab {

enum class ErrorCode {
  kMalformed,
  kDegreeMismatch,
  kSourceTargetMismatch,
  kSourceMismatch,
  kNonBasedPushout,
  kDegreeZero,
  kNegativeEntry,
  kBadLevel,
  kNotComposable,
  kInvalidResult,
  kBadDims,
  kBadBasepoint,
  kEmpty,
  kUnsupportedSpec,
  kParseError,
  kValidationError,
  kOverflow,
  kTooLarge,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; `code()` names the
// failing contract so callers can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(ErrorCode::kOverflow, what) {}
};

}  // namespace steinerlab
