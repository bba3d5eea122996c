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

#include "steinerlab/complex.hpp"

namespace steinerlab {

// ---------------------------------------------------------------- tensor

// Names of tensor generators: if both factors are named by words of a fixed
// length (cubes, the unit), names concatenate; otherwise T(x,y).
class TensorNaming {
 public:
  TensorNaming(const BasedComplex& a, const BasedComplex& b);
  Name operator()(const Name& x, const Name& y) const;

 private:
  bool words_;
};

// d(x⊗y) = dx⊗y + (-1)^|x| x⊗dy, ε(x⊗y) = ε(x)ε(y).
BasedComplex gray_tensor(const BasedComplex& a, const BasedComplex& b);
ComplexMap gray_tensor_map(const ComplexMap& f, const ComplexMap& g);
struct Iso;
// (A⊗B)⊗C -> A⊗(B⊗C) by renaming.
Iso tensor_assoc(const BasedComplex& a, const BasedComplex& b, const BasedComplex& c);

// ---------------------------------------------------------------- colimits

struct TorsionWitness {
  int degree;
  Coeff divisor;
};

struct PushoutResult {
  bool based = false;
  std::optional<BasedComplex> complex;
  std::optional<ComplexMap> leg_a;
  std::optional<ComplexMap> leg_b;
  std::optional<TorsionWitness> torsion_witness;
  std::string diagnostic;  // empty when based

  // The complex, or a NON_BASED_PUSHOUT error carrying the diagnostic.
  const BasedComplex& require() const;
};

// Generators of the result are the surviving direct-sum generators L(a), R(b).
PushoutResult pushout(const ComplexMap& f, const ComplexMap& g);
// Survivors keep the target's names; leg_a == leg_b is the projection.
PushoutResult coequalizer(const ComplexMap& f, const ComplexMap& g);

// ---------------------------------------------------------------- duals

enum class Duality { kOp, kCo, kCoop };

std::string_view to_string(Duality which);
// op: d_n -> (-1)^n d_n; co: (-1)^(n+1) d_n; coop: -d_n.
BasedComplex dual(const BasedComplex& a, Duality which);
inline BasedComplex dual_op(const BasedComplex& a) { return dual(a, Duality::kOp); }
inline BasedComplex dual_co(const BasedComplex& a) { return dual(a, Duality::kCo); }
inline BasedComplex dual_coop(const BasedComplex& a) { return dual(a, Duality::kCoop); }
// The same matrices between the dual complexes.
ComplexMap dual_map(const ComplexMap& f, Duality which);

struct Iso {
  ComplexMap forward;
  ComplexMap inverse;
};

// A^op ⊗ B^op -> (B ⊗ A)^op and the co analogue, x⊗y -> y⊗x.
Iso swap_iso_op(const BasedComplex& a, const BasedComplex& b);
Iso swap_iso_co(const BasedComplex& a, const BasedComplex& b);
// A^op ⋆ B^op -> (B ⋆ A)^op: L(x) -> R(x), R(y) -> L(y), J(x,y) -> J(y,x).
Iso join_op_iso(const BasedComplex& a, const BasedComplex& b);
// (□^n)^op -> □^n (resp. co), assembled from swap isos and the interval's
// vertex swap (op) or identity (co).
ComplexMap cube_selfduality(int n, Duality which);

// ---------------------------------------------------------------- join

// A ⋆ B from the pushout of A⊗D¹⊗B ⊃ A⊗∂D¹⊗B -> A ⊕ B, renamed to L(x), J(x,y),
// R(y) and checked against join_closed_form.
BasedComplex join(const BasedComplex& a, const BasedComplex& b);
// The same complex from the formula
//   d J(x,y) = J(dx,y) + (-1)^|x| (ε(x)[|x|=0] R(y) - ε(y)[|y|=0] L(x) - J(x,dy)).
BasedComplex join_closed_form(const BasedComplex& a, const BasedComplex& b);
// A ⋆ ℤ written literally from the paper-style point-join formula:
//   vertex x: d(x⋆) = x - ε(x) pt;  |x| >= 1: d(x⋆) = (-1)^|x| x + (dx)⋆.
BasedComplex join_point_displayed(const BasedComplex& a);
ComplexMap join_map(const ComplexMap& f, const ComplexMap& g);
// (A^co ⋆ B^co)^co
BasedComplex antijoin(const BasedComplex& a, const BasedComplex& b);

// Names used by the join presentation.
Name join_left(const Name& x);
Name join_mixed(const Name& x, const Name& y);
Name join_right(const Name& y);

// ---------------------------------------------------------------- suspension

// Generators S(x) in degree |x|+1 and poles bot0 (source), bot1 (target).
BasedComplex suspension(const BasedComplex& a);
BasedComplex suspension_via_pushout(const BasedComplex& a);
ComplexMap suspension_map(const ComplexMap& f);
// S(A^co)^co
BasedComplex antisuspension(const BasedComplex& a);
// The identity on generators S(A) -> S̄(A^coop).
ComplexMap susp_coop_iso(const BasedComplex& a);

Name susp_name(const Name& x);
Name pole_name(int side);  // 0: source pole, 1: target pole

// ---------------------------------------------------------------- quotients

// A ⊗ D¹ -> A ⋆ ℤ collapsing A ⊗ {1}.
ComplexMap p_map(const BasedComplex& a);
// A ⋆ ℤ -> S(A) collapsing A to the source pole.
ComplexMap ell_map(const BasedComplex& a);
// A ⊗ D¹ -> S(A), equal to compose(p_map, ell_map).
ComplexMap q_susp_map(const BasedComplex& a);

}  // namespace steinerlab
