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

#include "steinerlab/errors.hpp"

namespace steinerlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformed: return "MALFORMED";
    case ErrorCode::kDegreeMismatch: return "DEGREE_MISMATCH";
    case ErrorCode::kSourceTargetMismatch: return "SOURCE_TARGET_MISMATCH";
    case ErrorCode::kSourceMismatch: return "SOURCE_MISMATCH";
    case ErrorCode::kNonBasedPushout: return "NON_BASED_PUSHOUT";
    case ErrorCode::kDegreeZero: return "DEGREE_ZERO";
    case ErrorCode::kNegativeEntry: return "NEGATIVE_ENTRY";
    case ErrorCode::kBadLevel: return "BAD_LEVEL";
    case ErrorCode::kNotComposable: return "NOT_COMPOSABLE";
    case ErrorCode::kInvalidResult: return "INVALID_RESULT";
    case ErrorCode::kBadDims: return "BAD_DIMS";
    case ErrorCode::kBadBasepoint: return "BAD_BASEPOINT";
    case ErrorCode::kEmpty: return "EMPTY";
    case ErrorCode::kUnsupportedSpec: return "UNSUPPORTED_SPEC";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kValidationError: return "VALIDATION_ERROR";
    case ErrorCode::kOverflow: return "OVERFLOW";
    case ErrorCode::kTooLarge: return "TOO_LARGE";
  }
  return "UNKNOWN";
}

}  // namespace steinerlab
