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

#include <optional>
#include <string>
#include <vector>

namespace steinerlab {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<std::string> witness;  // where the check fails, rendered for humans
};

class CheckReport {
 public:
  CheckReport() = default;

  void add(std::string name, bool passed, std::optional<std::string> witness = std::nullopt) {
    checks_.push_back({std::move(name), passed, std::move(witness)});
  }
  void pass(std::string name) { add(std::move(name), true); }
  void fail(std::string name, std::string witness) { add(std::move(name), false, std::move(witness)); }
  // Appends all checks of `other`, prefixing their names.
  void merge(const CheckReport& other, const std::string& prefix = {});

  bool passed() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& name) const;
  // First failing check, if any.
  const CheckResult* first_failure() const;

  std::string to_text() const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace steinerlab
