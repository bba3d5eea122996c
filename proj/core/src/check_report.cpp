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

#include "steinerlab/check_report.hpp"

#include <algorithm>

namespace steinerlab {

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    checks_.push_back({prefix.empty() ? c.name : prefix + "." + c.name, c.passed, c.witness});
  }
}

bool CheckReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const CheckResult* CheckReport::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.name;
    if (c.witness) out += "  [" + *c.witness + "]";
    out += '\n';
  }
  out += passed() ? "RESULT pass\n" : "RESULT fail\n";
  return out;
}

}  // namespace steinerlab
