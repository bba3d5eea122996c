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
#include <vector>

#include "steinerlab/check_report.hpp"

namespace steinerlab::cli {

struct SuiteBounds {
  int max_disk = 8;
  int max_cube = 5;
  int max_oriental = 6;
  int random_thetas = 25;
  int random_complexes = 50;
};

struct SuiteItem {
  std::string id;
  std::string title;
  CheckReport report;
};

// The batteries, run concurrently and returned in a fixed order.
std::vector<SuiteItem> run_suite(const SuiteBounds& bounds = {});

CheckReport validity_battery(const SuiteBounds& bounds);
CheckReport counting_battery(const SuiteBounds& bounds);
CheckReport construction_battery(const SuiteBounds& bounds);
CheckReport identities_battery(const SuiteBounds& bounds);
CheckReport retraction_battery(const SuiteBounds& bounds);
CheckReport decomposition_battery(const SuiteBounds& bounds);
CheckReport atom_battery(const SuiteBounds& bounds);
CheckReport robustness_battery(const SuiteBounds& bounds);

}  // namespace steinerlab::cli
