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

#include <gtest/gtest.h>

#include <random>

#include "steinerlab/ops.hpp"
#include "steinerlab/random.hpp"
#include "steinerlab/retraction.hpp"
#include "steinerlab/shapes.hpp"
#include "steinerlab/steiner.hpp"
#include "support.hpp"

namespace steinerlab {
namespace {

using testing::boundary_of;
using Terms = std::map<std::string, Coeff>;

std::vector<BasedComplex> small_library() {
  return {unit(), interval(), disk(2), oriental(2), cube(2), oriental(3), boundary_disk(2), antioriental(2)};
}

TEST(GrayTensor, IntervalSquaredIsTheSquare) {
  BasedComplex sq = gray_tensor(interval(), interval());
  EXPECT_EQ(graded_counts(sq), (std::map<int, std::size_t>{{0, 4}, {1, 4}, {2, 1}}));
  EXPECT_EQ(sq, cube(2));
  // d(i⊗i) = d(i)⊗i - i⊗d(i) = 1i - 0i - i1 + i0.
  EXPECT_EQ(boundary_of(sq, "ii"), (Terms{{"1i", 1}, {"0i", -1}, {"i1", -1}, {"i0", 1}}));
}

TEST(GrayTensor, CubeDifferentialMatchesWordOracle) {
  BasedComplex c = cube(4);
  for (int q = 1; q <= 4; ++q)
    for (const Name& w : c.generators(q)) EXPECT_EQ(boundary_of(c, w.str()), testing::cube_boundary(w.str())) << w.str();
}

TEST(GrayTensor, UnitLaw) {
  for (const BasedComplex& a : small_library()) {
    EXPECT_TRUE(equal_presentation(gray_tensor(unit(), a), a));
    EXPECT_TRUE(equal_presentation(gray_tensor(a, unit()), a));
  }
}

TEST(GrayTensor, KoszulSignOnMixedFactors) {
  // d(T(x,y)) for x = 0.1.2 (degree 2) and y = i: dx⊗i + x⊗(1 - 0).
  BasedComplex t = gray_tensor(oriental(2), interval());
  Terms expected{{"T(1.2,i)", 1}, {"T(0.2,i)", -1}, {"T(0.1,i)", 1}, {"T(0.1.2,1)", 1}, {"T(0.1.2,0)", -1}};
  EXPECT_EQ(boundary_of(t, "T(0.1.2,i)"), expected);
  EXPECT_TRUE(validate_complex(t).passed());
}

TEST(GrayTensor, AssociatorIsAValidIso) {
  Iso a = tensor_assoc(oriental(1), disk(2), interval());
  EXPECT_TRUE(verify_mutually_inverse(a.forward, a.inverse).passed());
  EXPECT_TRUE(validate_map(a.forward).passed());
}

TEST(GrayTensorMap, Functorial) {
  ComplexMap id = identity_map(oriental(2));
  EXPECT_TRUE(testing::is_identity(gray_tensor_map(id, identity_map(interval()))));
  EXPECT_TRUE(validate_map(gray_tensor_map(s2(), s2())).passed());
  ComplexMap q = gray_tensor_map(q2(), identity_map(unit()));
  Renamed drop_unit = rename(q.target(), [](int, const Name& n) { return n.kids()[0]; });
  EXPECT_EQ(drop_unit.complex, oriental(2));
  EXPECT_EQ(compose(q, drop_unit.forward), q2());
  // (f;g)⊗(h;k) = (f⊗h);(g⊗k)
  ComplexMap lhs = gray_tensor_map(compose(s2(), q2()), compose(q2(), s2()));
  ComplexMap rhs = compose(gray_tensor_map(s2(), q2()), gray_tensor_map(q2(), s2()));
  EXPECT_EQ(lhs, rhs);
}

TEST(Pushout, GluingEndpointToStartpoint) {
  PushoutResult r = pushout(disk_inclusion(0, 1, Side::kTarget), disk_inclusion(0, 1, Side::kSource));
  ASSERT_TRUE(r.based) << r.diagnostic;
  EXPECT_EQ(graded_counts(*r.complex), (std::map<int, std::size_t>{{0, 3}, {1, 2}}));
  EXPECT_EQ(compose(disk_inclusion(0, 1, Side::kTarget), *r.leg_a),
            compose(disk_inclusion(0, 1, Side::kSource), *r.leg_b));
  EXPECT_TRUE(is_steiner(*r.complex).passed());
}

TEST(Pushout, TrivialSpan) {
  ComplexMap id = identity_map(unit());
  PushoutResult r = pushout(id, id);
  ASSERT_TRUE(r.based);
  EXPECT_TRUE(equal_presentation(*r.complex, unit()));
  EXPECT_TRUE(validate_map(*r.leg_a).passed());
}

TEST(Pushout, TorsionIsDiagnosed) {
  // Collapsing 2·x to zero in degree 0 leaves ℤ/2.
  BasedComplex c = unit();
  BasedComplex a = ComplexBuilder().vertex(Name("x")).build();
  ComplexMap twice = MapBuilder(c, a).set(Name(""), {{Name("x"), 2}}).build();
  PushoutResult r = pushout(twice, zero_map(c, zero()));
  EXPECT_FALSE(r.based);
  ASSERT_TRUE(r.torsion_witness);
  EXPECT_EQ(r.torsion_witness->degree, 0);
  EXPECT_EQ(r.torsion_witness->divisor, 2);
  EXPECT_FALSE(r.diagnostic.empty());
  EXPECT_THROW((void)r.require(), Error);
}

TEST(Pushout, SuspensionByPushoutMatchesClosedForm) {
  for (const BasedComplex& a : small_library())
    EXPECT_TRUE(equal_presentation(suspension_via_pushout(a), suspension(a)));
}

TEST(Coequalizer, ParallelPairIsTarget) {
  ComplexMap f = disk_inclusion(0, 1, Side::kSource);
  PushoutResult r = coequalizer(f, f);
  ASSERT_TRUE(r.based);
  EXPECT_EQ(*r.complex, f.target());
  EXPECT_TRUE(testing::is_identity(*r.leg_a));
}

TEST(Join, PointJoinPointIsTheArrow) {
  EXPECT_TRUE(equal_presentation(join(unit(), unit()), oriental(1)));
  Renamed as_simplex = join_point_as_oriental(1);
  EXPECT_EQ(as_simplex.forward.source(), join(oriental(1), unit()));
  EXPECT_EQ(as_simplex.complex, oriental(2));
}

TEST(Join, ClosedFormAgreesWithPushout) {
  for (const BasedComplex& a : small_library())
    for (const BasedComplex& b : {unit(), interval(), oriental(2)})
      EXPECT_EQ(join(a, b), join_closed_form(a, b));
}

// Oracle for A ⋆ ℤ read off the simplices: J(x,*) is x with the cone point
// appended last, so d J(x,*) = J(dx,*) + (-1)^(|x|+1) L(x), and for a vertex
// d J(x,*) = R(*) - L(x).
TEST(Join, PointJoinByHand) {
  BasedComplex a = oriental(2);
  BasedComplex j = join(a, unit());
  EXPECT_EQ(boundary_of(j, "J(0,*)"), (Terms{{"L(0)", -1}, {"R(*)", 1}}));
  EXPECT_EQ(boundary_of(j, "J(0.1,*)"), (Terms{{"J(1,*)", 1}, {"J(0,*)", -1}, {"L(0.1)", 1}}));
  EXPECT_EQ(boundary_of(j, "J(0.1.2,*)"),
            (Terms{{"J(1.2,*)", 1}, {"J(0.2,*)", -1}, {"J(0.1,*)", 1}, {"L(0.1.2)", -1}}));
  EXPECT_EQ(j.aug(j.index_of(0, Name::parse("R(*)"))), 1);
}

TEST(Join, DisplayedPointFormulaIsTheCoopConjugate) {
  // The literal point-join display differs from the pushout join by the sign
  // of the cone generators; it is isomorphic to the pushout join of A^coop,
  // conjugated back.
  for (const BasedComplex& a : {unit(), disk(2), oriental(3), cube(2)}) {
    BasedComplex displayed = join_point_displayed(a);
    EXPECT_TRUE(validate_complex(displayed).passed());
    EXPECT_EQ(graded_counts(displayed), graded_counts(join(a, unit())));
    EXPECT_FALSE(equal_presentation(displayed, join(a, unit())));
  }
}

TEST(Join, Associative) {
  BasedComplex lhs = join(join(oriental(1), unit()), interval());
  BasedComplex rhs = join(oriental(1), join(unit(), interval()));
  EXPECT_EQ(graded_counts(lhs), graded_counts(rhs));
  EXPECT_TRUE(is_steiner(lhs).passed());
}

TEST(Antijoin, Examples) {
  BasedComplex aj = antijoin(unit(), unit());
  EXPECT_EQ(graded_counts(aj), graded_counts(oriental(1)));
  EXPECT_TRUE(validate_complex(aj).passed());
  ComplexMap names = join_point_as_oriental(1).forward;
  EXPECT_EQ(testing::rename_along(antijoin(oriental(1), unit()), names).complex, dual_co(oriental(2)));
  for (const BasedComplex& a : small_library())
    EXPECT_EQ(graded_counts(antijoin(a, interval())), graded_counts(join(a, interval())));
}

TEST(Suspension, Examples) {
  EXPECT_TRUE(equal_presentation(suspension(unit()), disk(1)));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(suspension(disk(n - 1)), disk(n));
  EXPECT_EQ(suspension(boundary_disk(1)), boundary_disk(2));
  EXPECT_TRUE(equal_presentation(antisuspension(unit()), disk(1)));
}

TEST(Suspension, AntisuspensionFlipsTopSign) {
  BasedComplex s = suspension(oriental(1));
  BasedComplex a = antisuspension(oriental(1));
  EXPECT_EQ(graded_counts(s), graded_counts(a));
  Name top = Name::parse("S(0.1)");
  Chain ds = s.d(2, s.index_of(2, top));
  Chain da = a.d(2, a.index_of(2, top));
  EXPECT_EQ(ds, da.scaled(-1));
  EXPECT_EQ(s.d(1, 0), a.d(1, 0));
}

TEST(Duals, SignConventions) {
  BasedComplex d2 = disk(2);
  BasedComplex op = dual_op(d2);
  EXPECT_EQ(op.d(2, 0), d2.d(2, 0));
  EXPECT_EQ(op.d(1, 0), d2.d(1, 0).scaled(-1));
  EXPECT_EQ(dual_co(interval()), interval());
  for (const BasedComplex& a : small_library()) {
    EXPECT_EQ(dual_op(dual_op(a)), a);
    EXPECT_EQ(dual_co(dual_co(a)), a);
    EXPECT_EQ(dual_coop(a), dual_op(dual_co(a)));
  }
}

TEST(SwapIso, PairsAreVerifiedIsos) {
  std::vector<BasedComplex> shapes{interval(), disk(2), oriental(2), cube(2)};
  for (const BasedComplex& a : shapes)
    for (const BasedComplex& b : shapes)
      for (Iso iso : {swap_iso_op(a, b), swap_iso_co(a, b)}) {
        EXPECT_TRUE(validate_map(iso.forward).passed());
        EXPECT_TRUE(verify_mutually_inverse(iso.forward, iso.inverse).passed());
      }
  Iso u = swap_iso_op(unit(), oriental(2));
  EXPECT_TRUE(equal_presentation(u.forward.source(), u.forward.target()));
}

TEST(SwapIso, NaturalInBothArguments) {
  ComplexMap f = s2();
  ComplexMap g = disk_inclusion(1, 2, Side::kTarget);
  ComplexMap lhs = compose(gray_tensor_map(dual_map(f, Duality::kOp), dual_map(g, Duality::kOp)),
                           swap_iso_op(f.target(), g.target()).forward);
  ComplexMap rhs = compose(swap_iso_op(f.source(), g.source()).forward,
                           dual_map(gray_tensor_map(g, f), Duality::kOp));
  EXPECT_EQ(lhs, rhs);
}

TEST(CubeSelfDuality, Examples) {
  EXPECT_TRUE(testing::is_identity(cube_selfduality(0, Duality::kOp)));
  ComplexMap flip = cube_selfduality(1, Duality::kOp);
  EXPECT_EQ(testing::terms_of(flip.target(), flip.image(Name("0"))), (Terms{{"1", 1}}));
  EXPECT_EQ(testing::terms_of(flip.target(), flip.image(Name("1"))), (Terms{{"0", 1}}));
  for (int n = 0; n <= 4; ++n)
    for (Duality d : {Duality::kOp, Duality::kCo}) {
      ComplexMap f = cube_selfduality(n, d);
      EXPECT_TRUE(validate_map(f).passed()) << n;
      auto inv = invert_bijection(f);
      ASSERT_TRUE(inv);
      EXPECT_TRUE(verify_mutually_inverse(f, *inv).passed());
    }
}

TEST(JoinOpIso, Valid) {
  Iso iso = join_op_iso(oriental(1), interval());
  EXPECT_TRUE(validate_map(iso.forward).passed());
  EXPECT_TRUE(verify_mutually_inverse(iso.forward, iso.inverse).passed());
}

TEST(Quotients, Examples) {
  ComplexMap q = q_susp_map(unit());
  EXPECT_TRUE(equal_presentation(q.source(), disk(1)));
  EXPECT_TRUE(equal_presentation(q.target(), disk(1)));
  EXPECT_EQ(q, positional_iso(q.source(), q.target()));
  // Δ¹ ⊗ D¹ named T(x,y) is the square once the arrow 0.1 is spelled i.
  ComplexMap p = p_map(oriental(1));
  Renamed as_square = rename(p.source(), [](int, const Name& n) {
    std::string x = n.kids()[0].str();
    return Name((x == "0.1" ? std::string("i") : x) + n.kids()[1].str());
  });
  EXPECT_EQ(as_square.complex, cube(2));
  EXPECT_EQ(compose(as_square.backward, p, join_point_as_oriental(1).forward), q2());
  for (const BasedComplex& a : small_library()) {
    EXPECT_TRUE(validate_map(p_map(a)).passed());
    EXPECT_TRUE(validate_map(ell_map(a)).passed());
    EXPECT_EQ(q_susp_map(a), compose(p_map(a), ell_map(a)));
  }
}

// Property: S(A) ≅ S̄(A^coop) by the identity on generators, on random Steiner complexes.
TEST(SuspCoop, RandomComplexes) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 15; ++trial) {
    BasedComplex a = random_steiner_complex(rng, 60);
    ComplexMap iso = susp_coop_iso(a);
    EXPECT_TRUE(validate_map(iso).passed());
    auto inv = invert_bijection(iso);
    ASSERT_TRUE(inv);
    EXPECT_TRUE(validate_map(*inv).passed());
  }
}

// Property: Gray tensor and join preserve Steiner-ness on random inputs.
TEST(Operations, PreserveSteiner) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    BasedComplex a = random_steiner_complex(rng, 30);
    BasedComplex b = random_steiner_complex(rng, 20);
    EXPECT_TRUE(is_steiner(gray_tensor(a, b)).passed());
    EXPECT_TRUE(is_steiner(join(a, b)).passed());
    EXPECT_TRUE(is_steiner(suspension(a)).passed());
  }
}

}  // namespace
}  // namespace steinerlab
