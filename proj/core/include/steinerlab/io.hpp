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

#include <string>
#include <string_view>

#include "steinerlab/complex.hpp"
#include "steinerlab/errors.hpp"

namespace steinerlab {

inline constexpr std::string_view kFormatVersion = "steinerlab-adc/1";

// A document that parsed but describes an invalid complex or map.
class ValidationError : public Error {
 public:
  explicit ValidationError(CheckReport report)
      : Error(ErrorCode::kValidationError, report.to_text()), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

// JSON documents with a fixed layout: canonical generator order, two-space
// indentation, coefficients as decimal strings. Output ends with a newline.
std::string emit(const BasedComplex& c);
std::string emit(const ComplexMap& f);

// PARSE_ERROR names the offending location; VALIDATION_ERROR carries the report.
// With validate off only the document structure is checked.
BasedComplex parse_complex(std::string_view text, bool validate = true);
ComplexMap parse_map(std::string_view text);

std::string report_json(const CheckReport& report);

}  // namespace steinerlab
