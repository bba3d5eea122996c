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
#include <vector>

#include "steinerlab/complex.hpp"

namespace steinerlab {

BasedComplex unit();      // one vertex, named by the empty word
BasedComplex zero();      // no generators
BasedComplex interval();  // vertices 0, 1 and edge i with d(i) = 1 - 0

// Sⁿ(unit) and Sⁿ(zero). In degree k < n the generators are S^k(bot0) (source)
// and S^k(bot1) (target).
BasedComplex disk(int n);
BasedComplex boundary_disk(int n);
// Name of the degree-k generator of a disk on the given side (0 source, 1 target).
Name disk_generator(int k, int side);
Name disk_top(int n);

// Iterated Gray tensor of the interval; generators are words over {0,1,i}.
BasedComplex cube(int n);

// Subsets of {0..n} of size k+1 in degree k, named "v0.v1...", alternating faces.
BasedComplex oriental(int n);
// n-fold join of the unit, renamed to subset names.
BasedComplex oriental_via_join(int n);
BasedComplex antioriental(int n);
Name subset_name(const std::vector<int>& vertices);
std::vector<int> subset_vertices(const Name& name);

enum class Side { kSource = 0, kTarget = 1 };
const char* to_string(Side side);

// disk(j) -> disk(i), j <= i: the top of disk(j) goes to the side generator.
ComplexMap disk_inclusion(int j, int i, Side side);

struct ThetaSpec {
  std::vector<int> dims;                        // i_0 .. i_n
  std::vector<int> glue;                        // j_1 .. j_n
  std::vector<std::pair<Side, Side>> sides;     // sides into D^{i_{l-1}} and D^{i_l}
};

void check_theta_spec(const ThetaSpec& spec);  // throws BAD_DIMS
// "2,1,2/0,1": dims, then glue dimensions; every gluing is target-to-source.
// Other sides are written per gluing after a second slash as "ts", "ss", ...
std::string to_string(const ThetaSpec& spec);
ThetaSpec parse_theta_spec(std::string_view text);  // throws PARSE_ERROR
// Generators of the l-th disk are tagged D<l>(x); glued ones keep the earlier tag.
struct ThetaObject {
  BasedComplex complex;
  std::vector<ComplexMap> disk_maps;  // disk(i_l) -> complex
};
ThetaObject theta_object(const ThetaSpec& spec);
BasedComplex theta(const ThetaSpec& spec);

// Pushout identifying the marked vertices. Generators are tagged L(x) for a
// and R(y) for b; the shared basepoint survives as R(point_b).
struct WedgeResult {
  BasedComplex complex;
  ComplexMap left;   // a -> wedge
  ComplexMap right;  // b -> wedge
};
WedgeResult wedge_with_legs(const BasedComplex& a, const Name& point_a, const BasedComplex& b,
                            const Name& point_b);
BasedComplex wedge(const BasedComplex& a, const Name& point_a, const BasedComplex& b, const Name& point_b);

enum class Family { kCube, kOriental };
const char* to_string(Family family);
BasedComplex shape(Family family, int n);

// Coequalizer of the codimension-two face diagram against truncate_top(shape).
CheckReport boundary_decomposition_check(Family family, int n);
// D^n ⊔_{∂D^n} truncate_top(shape) against the shape.
CheckReport top_cell_decomposition_check(Family family, int n);

}  // namespace steinerlab
