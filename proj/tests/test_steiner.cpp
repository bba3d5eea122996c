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

#include "steinerlab/fixtures.hpp"
#include "steinerlab/random.hpp"
#include "steinerlab/shapes.hpp"
#include "steinerlab/steiner.hpp"
#include "support.hpp"

namespace steinerlab {
namespace {

using Terms = std::map<std::string, Coeff>;

Terms terms(const BasedComplex& c, const Chain& x) { return testing::terms_of(c, x); }

TEST(PosNeg, TriangleSplit) {
  BasedComplex o = oriental(2);
  PosNeg pn = pos_neg_parts(o, o.gen(2, Name("0.1.2")));
  EXPECT_EQ(terms(o, pn.plus), (Terms{{"0.1", 1}, {"1.2", 1}}));
  EXPECT_EQ(terms(o, pn.minus), (Terms{{"0.2", 1}}));
}

TEST(PosNeg, DiskAndLinearity) {
  BasedComplex d = disk(3);
  PosNeg pn = pos_neg_parts(d, d.gen(3, disk_top(3)));
  EXPECT_EQ(terms(d, pn.plus), (Terms{{disk_generator(2, 1).str(), 1}}));
  EXPECT_EQ(terms(d, pn.minus), (Terms{{disk_generator(2, 0).str(), 1}}));
  BasedComplex o = oriental(2);
  Chain x = o.gen(2, Name("0.1.2"));
  PosNeg once = pos_neg_parts(o, x);
  PosNeg twice = pos_neg_parts(o, x + x);
  EXPECT_EQ(twice.plus, once.plus.scaled(2));
  EXPECT_EQ(twice.minus, once.minus.scaled(2));
}

TEST(Atom, TriangleWorkedTable) {
  BasedComplex o = oriental(2);
  CellTable t = atom_table(o, Name("0.1.2"));
  ASSERT_EQ(t.dim, 2);
  EXPECT_EQ(terms(o, t.minus[1]), (Terms{{"0.2", 1}}));
  EXPECT_EQ(terms(o, t.plus[1]), (Terms{{"0.1", 1}, {"1.2", 1}}));
  EXPECT_EQ(terms(o, t.minus[0]), (Terms{{"0", 1}}));
  EXPECT_EQ(terms(o, t.plus[0]), (Terms{{"2", 1}}));
  EXPECT_EQ(t.minus[2], t.plus[2]);
}

TEST(Atom, DiskLevels) {
  BasedComplex d = disk(3);
  CellTable t = atom_table(d, disk_top(3));
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(terms(d, t.minus[k]), (Terms{{disk_generator(k, 0).str(), 1}}));
    EXPECT_EQ(terms(d, t.plus[k]), (Terms{{disk_generator(k, 1).str(), 1}}));
  }
}

TEST(Atom, SquareTable) {
  BasedComplex c = cube(2);
  CellTable t = atom_table(c, Name("ii"));
  EXPECT_EQ(terms(c, t.minus[1]), (Terms{{"0i", 1}, {"i1", 1}}));
  EXPECT_EQ(terms(c, t.plus[1]), (Terms{{"1i", 1}, {"i0", 1}}));
  EXPECT_EQ(terms(c, t.minus[0]), (Terms{{"00", 1}}));
  EXPECT_EQ(terms(c, t.plus[0]), (Terms{{"11", 1}}));
}

TEST(Unitality, Examples) {
  EXPECT_TRUE(unitality_check(oriental(4)).passed());
  EXPECT_TRUE(unitality_check(unit()).passed());
  BasedComplex c = ComplexBuilder()
                       .vertex(Name("x"))
                       .vertex(Name("y"))
                       .vertex(Name("z"))
                       .cell(1, Name("e"), {{Name("y"), 1}, {Name("z"), 1}, {Name("x"), -2}})
                       .build();
  CheckReport r = unitality_check(c);
  ASSERT_FALSE(r.passed());
  EXPECT_NE(r.first_failure()->witness->find("e"), std::string::npos);
  CheckReport fixture = unitality_check(non_unital_fixture());
  const CheckResult* f = fixture.first_failure();
  ASSERT_NE(f, nullptr);
  EXPECT_TRUE(f->witness.has_value());
}

TEST(Preorder, Edges) {
  PreorderRelation o = preorder(oriental(2));
  EXPECT_TRUE(o.has_edge(Name("0.2"), Name("0.1.2")));
  EXPECT_TRUE(o.has_edge(Name("0.1.2"), Name("0.1")));
  EXPECT_FALSE(o.has_edge(Name("0.1"), Name("0.1.2")));
  EXPECT_TRUE(preorder(unit()).edges.empty());
  PreorderRelation d = preorder(disk(2));
  EXPECT_TRUE(d.has_edge(disk_generator(1, 0), disk_top(2)));
  EXPECT_TRUE(d.has_edge(disk_top(2), disk_generator(1, 1)));
}

TEST(Loopfree, LoopFixtureWitness) {
  CheckReport r = is_strongly_loopfree(loop_fixture());
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(*r.first_failure()->witness, "x <= e <= y <= f <= x");
  EXPECT_FALSE(is_steiner(loop_fixture()).passed());
  EXPECT_TRUE(is_strongly_loopfree(cube(4)).passed());
}

// Property: a reported linear extension orders every generating edge.
TEST(Loopfree, LinearExtensionRespectsEdges) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    BasedComplex c = random_steiner_complex(rng, 80);
    LoopfreeAnalysis a = loopfree_analysis(c);
    ASSERT_TRUE(a.loopfree);
    std::map<GenRef, std::size_t> position;
    for (std::size_t i = 0; i < a.linear_extension.size(); ++i) position[a.linear_extension[i]] = i;
    EXPECT_EQ(position.size(), c.total());
    for (auto& [from, to] : preorder(c).edges) EXPECT_LT(position[from], position[to]);
  }
}

TEST(Steiner, Families) {
  for (int n = 0; n <= 8; ++n) EXPECT_TRUE(is_steiner(oriental(n)).passed()) << n;
  for (int n = 0; n <= 6; ++n) EXPECT_TRUE(is_steiner(cube(n)).passed()) << n;
}

TEST(CellLaws, SmallShapes) {
  for (const BasedComplex& c : {oriental(3), cube(3), disk(3)}) {
    CheckReport r = cell_laws_on_atoms(c);
    EXPECT_TRUE(r.passed()) << r.to_text();
  }
}

// Property: atoms of random Steiner complexes are valid, unital tables.
TEST(Atom, RandomComplexesAreUnital) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    BasedComplex c = random_steiner_complex(rng, 60);
    EXPECT_TRUE(unitality_check(c).passed());
    for (int q = 0; q <= c.top_degree(); ++q)
      for (std::uint32_t i = 0; i < c.count(q); ++i) EXPECT_TRUE(validate_table(atom_table(c, q, i)).passed());
  }
}

}  // namespace
}  // namespace steinerlab
