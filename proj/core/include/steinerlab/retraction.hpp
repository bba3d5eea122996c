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

#include <memory>
#include <random>

#include "steinerlab/ops.hpp"
#include "steinerlab/shapes.hpp"

namespace steinerlab {

// embed: A -> B and retract: B -> A with embed then retract the identity of A.
struct RetractionPair {
  ComplexMap embed;
  ComplexMap retract;
};

// EMBED_VALID, RETRACT_VALID, COMPOSITE_IDENTITY, IDEMPOTENT.
CheckReport verify_retraction(const RetractionPair& pair);

// □² -> Δ²: collapses the edge i1, merging 01 and 11 into the vertex 2.
ComplexMap q2();
// Δ² -> □²: identity in degree 2, the long edge goes to 0i + i1.
ComplexMap s2();
// (q2 then s2) ⊗ id_X on □² ⊗ X.
ComplexMap h_map(const BasedComplex& x);

// D¹ ⊗ S(A) -> S(D¹ ⊗ A) and its section S(D¹ ⊗ A) -> D¹ ⊗ S(A).
ComplexMap rho_map(const BasedComplex& a);
ComplexMap phi_map(const BasedComplex& a);

// Section of q_{□ⁿ}: □ⁿ⁺¹ -> S(□ⁿ); embed is S(□ⁿ) -> □ⁿ⁺¹.
RetractionPair section_q_cube(int n);

// ξₙ: □ⁿ -> Δⁿ, ξ_{n+1} = p_{Δⁿ} ∘ (ξₙ ⊗ D¹) followed by Δⁿ ⋆ D⁰ ≅ Δⁿ⁺¹.
ComplexMap xi(int n);
RetractionPair section_xi(int n);

// D¹ ⊗ B -> D⁰ ⋆ B collapsing {0} ⊗ B.
ComplexMap cone_quotient(const BasedComplex& b);

// For B = D⁰ ⋆ X: the endomap e of D¹ ⊗ B induced from h' ⊗ X along D¹ ⊗ c_X,
// and s: D⁰ ⋆ B -> D¹ ⊗ B induced from e along c_B.
struct ESKappa {
  ComplexMap e;
  ComplexMap s;
  ComplexMap cone;         // c_B
  ComplexMap h_prime;      // h' on □²
  CheckReport report;      // the commuting squares and triangles
};
ESKappa e_s_kappa(const BasedComplex& x);

// Section of ℓ: Δⁿ⁺¹ -> S(Δⁿ).
RetractionPair section_ell(int n);

// Δⁿ ∨ Δᵐ (glued at n ~ 0) -> Δⁿ⁺ᵐ and a left inverse.
ComplexMap zeta(int n, int m);
ComplexMap theta_left_inverse(int n, int m);

// Renamings between join presentations and subset-named orientals.
Renamed join_point_as_oriental(int n);  // Δⁿ ⋆ D⁰ -> Δⁿ⁺¹
Renamed cone_as_oriental(int n);        // D⁰ ⋆ Δⁿ⁻¹ -> Δⁿ (n >= 0)
// (Δⁿ)^op -> Δⁿ, reversing vertices.
ComplexMap oriental_reversal(int n);

// Θ-objects generated from the point by suspension and bipointed wedge.
struct ThetaTree {
  enum class Kind { kPoint, kSuspension, kWedge } kind = Kind::kPoint;
  std::vector<std::shared_ptr<const ThetaTree>> kids;
  std::string str() const;
};

// Standard specs glue the target of one disk to the source of the next along
// a disk of lower dimension than both. Anything else is UNSUPPORTED_SPEC.
ThetaTree theta_tree(const ThetaSpec& spec);
// Σ dims - Σ glue, the dimension of the oriental the object retracts from.
int theta_total_dimension(const ThetaSpec& spec);
ThetaSpec random_theta_spec(std::mt19937_64& rng, int max_disks, int max_dim);

struct ThetaRetraction {
  int dimension;          // N
  RetractionPair pair;    // theta(spec) -> Δᴺ -> theta(spec)
  CheckReport report;
};
ThetaRetraction theta_retract_into_oriental(const ThetaSpec& spec);

// f ∨ g between bipointed wedges; f and g must preserve the marked vertices.
ComplexMap wedge_map(const ComplexMap& f, const Name& fa, const ComplexMap& g, const Name& gb);

}  // namespace steinerlab
