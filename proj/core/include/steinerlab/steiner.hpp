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

#include "steinerlab/cells.hpp"

namespace steinerlab {

struct PosNeg {
  Chain plus;
  Chain minus;
};

// d(x) = plus - minus with both parts non-negative and disjointly supported.
PosNeg pos_neg_parts(const BasedComplex& c, const Chain& x);

// x⁻_n = x⁺_n = b, then x^ε_k = ∂^ε(x^ε_{k+1}).
CellTable atom_table(const BasedComplex& c, const Name& b);
CellTable atom_table(const BasedComplex& c, int degree, std::uint32_t index);

CheckReport unitality_check(const BasedComplex& c);

struct GenRef {
  int degree;
  std::uint32_t index;
  friend auto operator<=>(const GenRef&, const GenRef&) = default;
};

// Generating edges of the ≤ relation: (x, g) for x in supp ∂⁻g and (g, y) for
// y in supp ∂⁺g.
struct PreorderRelation {
  BasedComplex complex;
  std::vector<std::pair<GenRef, GenRef>> edges;

  bool has_edge(const Name& from, const Name& to) const;
};

PreorderRelation preorder(const BasedComplex& c);

struct LoopfreeAnalysis {
  bool loopfree = true;
  std::vector<GenRef> cycle;             // closed walk a0 ≤ a1 ≤ ... ≤ a0 when not loop-free
  std::vector<GenRef> linear_extension;  // when loop-free
};

LoopfreeAnalysis loopfree_analysis(const BasedComplex& c);
// On success the witness carries a linear extension, on failure a cycle.
CheckReport is_strongly_loopfree(const BasedComplex& c);
CheckReport is_steiner(const BasedComplex& c);

// Associativity, units and interchange of cell composition, checked on every
// composable configuration drawn from the atoms, their iterated sources and
// targets, and identities on those: COMPOSITES_VALID, ASSOCIATIVITY,
// LEFT_UNIT, RIGHT_UNIT, INTERCHANGE.
CheckReport cell_laws_on_atoms(const BasedComplex& c);

}  // namespace steinerlab
