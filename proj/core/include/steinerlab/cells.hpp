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

#include <vector>

#include "steinerlab/complex.hpp"

namespace steinerlab {

// An n-cell of the strict ∞-category of a Steiner complex: chains x⁻_k, x⁺_k
// for k = 0..n with x⁻_n = x⁺_n.
struct CellTable {
  BasedComplex ambient;
  int dim = 0;
  std::vector<Chain> minus;
  std::vector<Chain> plus;

  const Chain& top() const { return plus[dim]; }
  std::string format() const;
  friend bool operator==(const CellTable& a, const CellTable& b);
};

CheckReport validate_table(const CellTable& t);

// Truncation at level k with top x⁻_k (source) or x⁺_k (target).
CellTable source(const CellTable& t, int k);
CellTable target(const CellTable& t, int k);
// The identity on t: one level higher with zero top chain.
CellTable identity_table(const CellTable& t);
// A cell is degenerate when its top chain is zero (it carries no new content).
bool is_degenerate(const CellTable& t);
// u ∘_p t, where target(t, p) = source(u, p).
CellTable compose_tables(const CellTable& u, const CellTable& t, int p);

}  // namespace steinerlab
