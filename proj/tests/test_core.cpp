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

#include <cstdlib>
#include <limits>
#include <random>

#include "steinerlab/complex.hpp"
#include "steinerlab/fixtures.hpp"
#include "steinerlab/ops.hpp"
#include "steinerlab/retraction.hpp"
#include "steinerlab/shapes.hpp"
#include "support.hpp"

namespace steinerlab {
namespace {

using testing::binomial;

TEST(Name, ParseRoundTrip) {
  for (const char* text : {"0.1.2", "ii0", "L(0.1)", "J(0,*)", "T(L(x),S(bot0))", "*"}) {
    EXPECT_EQ(Name::parse(text).str(), text);
  }
  EXPECT_TRUE(Name::parse("i01").is_word());
  EXPECT_FALSE(Name::parse("L(i)").is_word());
}

TEST(Name, OrderIsTotalAndStable) {
  std::vector<Name> names{Name::parse("R(0)"), Name::parse("L(1)"), Name::parse("L(0)"), Name::parse("J(0,1)")};
  std::sort(names.begin(), names.end());
  std::vector<Name> again = names;
  std::reverse(again.begin(), again.end());
  std::sort(again.begin(), again.end());
  EXPECT_EQ(names, again);
  for (std::size_t i = 0; i + 1 < names.size(); ++i) EXPECT_LT(names[i], names[i + 1]);
}

TEST(Chain, MergesAndDropsZeros) {
  Chain c(1, {{2, 3}, {0, 1}, {2, -3}, {1, 4}});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.coeff(0), 1);
  EXPECT_EQ(c.coeff(1), 4);
  EXPECT_EQ(c.coeff(2), 0);
  Chain pos(1), neg(1);
  Chain mixed(1, {{0, 2}, {1, -5}});
  mixed.split(pos, neg);
  EXPECT_EQ(pos - neg, mixed);
  EXPECT_TRUE(pos.is_nonnegative());
  EXPECT_TRUE(neg.is_nonnegative());
}

TEST(Chain, OverflowIsAHardError) {
  Coeff big = std::numeric_limits<Coeff>::max();
  Chain a = Chain::basis(0, 0, big);
  EXPECT_THROW(a += Chain::basis(0, 0, 1), OverflowError);
  EXPECT_THROW((void)a.scaled(2), OverflowError);
  EXPECT_THROW((void)checked_neg(std::numeric_limits<Coeff>::min()), OverflowError);
}

TEST(Builder, RejectsDanglingAndDuplicateNames) {
  try {
    ComplexBuilder().vertex(Name("x")).cell(1, Name("e"), {{Name("y"), 1}}).build();
    FAIL() << "expected MALFORMED";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformed);
  }
  EXPECT_THROW(ComplexBuilder().vertex(Name("x")).vertex(Name("x")).build(), Error);
}

TEST(Builder, GeneratorCapIsEnforced) {
  ::setenv("STEINERLAB_MAX_GENERATORS", "10", 1);
  try {
    (void)cube(3);
    ::unsetenv("STEINERLAB_MAX_GENERATORS");
    FAIL() << "expected TOO_LARGE";
  } catch (const Error& e) {
    ::unsetenv("STEINERLAB_MAX_GENERATORS");
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_NO_THROW((void)cube(3));
}

TEST(ValidateComplex, DiskPasses) { EXPECT_TRUE(validate_complex(disk(2)).passed()); }

TEST(ValidateComplex, DSquaredWitness) {
  BasedComplex c = ComplexBuilder()
                       .vertex(Name("v"))
                       .cell(1, Name("e"), {{Name("v"), 1}})
                       .cell(2, Name("c"), {{Name("e"), 1}})
                       .build();
  CheckReport r = validate_complex(c);
  const CheckResult* d2 = r.find("D2_ZERO");
  ASSERT_NE(d2, nullptr);
  EXPECT_FALSE(d2->passed);
  ASSERT_TRUE(d2->witness);
  EXPECT_NE(d2->witness->find("c"), std::string::npos);
}

TEST(ValidateComplex, AugmentationWitness) {
  BasedComplex c = ComplexBuilder()
                       .vertex(Name("x"))
                       .vertex(Name("y"))
                       .cell(1, Name("e"), {{Name("x"), 1}, {Name("y"), 1}})
                       .build();
  const CheckResult* r = validate_complex(c).find("AUG_KILLS_D1");
  ASSERT_NE(r, nullptr);
  EXPECT_FALSE(r->passed);
  EXPECT_NE(r->witness->find("e"), std::string::npos);
}

TEST(ValidateComplex, NegativeAugmentation) {
  BasedComplex c = ComplexBuilder().vertex(Name("x"), -1).build();
  EXPECT_FALSE(validate_complex(c).find("AUG_NONNEGATIVE")->passed);
}

TEST(ValidateMap, IdentityAndSectionPass) {
  EXPECT_TRUE(validate_map(identity_map(cube(2))).passed());
  EXPECT_TRUE(validate_map(s2()).passed());
  EXPECT_TRUE(validate_map(identity_map(oriental(3))).passed());
}

TEST(ValidateMap, NegativeVertexImageFailsPositivity) {
  BasedComplex u = unit();
  ComplexMap f = MapBuilder(u, u).set(Name(""), {{Name(""), -1}}).build();
  CheckReport r = validate_map(f);
  EXPECT_FALSE(r.find("POSITIVITY")->passed);
  EXPECT_FALSE(r.find("AUG_PRESERVED")->passed);
}

TEST(ValidateMap, ChainRuleFailure) {
  // The edge of the interval sent to zero while the vertices are kept.
  BasedComplex i = interval();
  ComplexMap f = MapBuilder(i, i).set(Name("0"), {{Name("0"), 1}}).set(Name("1"), {{Name("1"), 1}}).build();
  EXPECT_FALSE(validate_map(f).find("CHAIN_RULE")->passed);
}

TEST(Compose, OrderIsFirstThenSecond) {
  EXPECT_TRUE(testing::is_identity(compose(s2(), q2())));
  ComplexMap f = q2();
  EXPECT_EQ(compose(f, identity_map(f.target())), f);
  EXPECT_EQ(compose(identity_map(f.source()), f), f);
  EXPECT_THROW((void)compose(q2(), q2()), Error);
}

TEST(Compose, Associative) {
  ComplexMap a = s2();
  ComplexMap b = q2();
  ComplexMap c = s2();
  EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  ComplexMap id = identity_map(unit());
  EXPECT_EQ(compose(id, id), id);
}

TEST(DirectSum, CountsAdd) {
  EXPECT_TRUE(equal_presentation(direct_sum(unit(), unit()), boundary_disk(1)));
  auto counts = graded_counts(direct_sum(disk(1), disk(2)));
  EXPECT_EQ(counts, (std::map<int, std::size_t>{{0, 4}, {1, 3}, {2, 1}}));
  EXPECT_TRUE(equal_presentation(direct_sum(zero(), oriental(2)), oriental(2)));
  for (auto [a, b] : {std::pair{cube(2), oriental(3)}, std::pair{disk(3), antioriental(2)}}) {
    auto sum = graded_counts(direct_sum(a, b));
    auto ca = graded_counts(a), cb = graded_counts(b);
    for (auto& [k, v] : sum) EXPECT_EQ(v, ca[k] + cb[k]);
  }
}

TEST(GradedCounts, SmallShapes) {
  EXPECT_EQ(graded_counts(cube(3)), (std::map<int, std::size_t>{{0, 8}, {1, 12}, {2, 6}, {3, 1}}));
  EXPECT_EQ(graded_counts(oriental(3)), (std::map<int, std::size_t>{{0, 4}, {1, 6}, {2, 4}, {3, 1}}));
  EXPECT_EQ(graded_counts(disk(4)), (std::map<int, std::size_t>{{0, 2}, {1, 2}, {2, 2}, {3, 2}, {4, 1}}));
}

TEST(EqualPresentation, Examples) {
  BasedComplex c = oriental(3);
  EXPECT_TRUE(equal_presentation(c, c));
  EXPECT_TRUE(equal_presentation(cube(1), oriental(1)));
  EXPECT_FALSE(equal_presentation(cube(2), oriental(2)));
}

TEST(MutuallyInverse, Examples) {
  Iso swap = swap_iso_op(interval(), cube(2));
  EXPECT_TRUE(verify_mutually_inverse(swap.forward, swap.inverse).passed());
  ComplexMap id = identity_map(oriental(2));
  EXPECT_TRUE(verify_mutually_inverse(id, id).passed());
  // q after s is the identity, s after q is not.
  EXPECT_FALSE(verify_mutually_inverse(s2(), q2()).passed());
}

TEST(Rename, InvertBijection) {
  Renamed r = rename(oriental(2), [](int, const Name& n) { return tagged("v", n); });
  EXPECT_TRUE(validate_map(r.forward).passed());
  auto inv = invert_bijection(r.forward);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, r.backward);
  EXPECT_FALSE(invert_bijection(q2()));
}

TEST(Truncate, DropsTopDegree) {
  EXPECT_EQ(graded_counts(truncate_top(cube(2))), (std::map<int, std::size_t>{{0, 4}, {1, 4}}));
  EXPECT_TRUE(validate_map(truncation_inclusion(oriental(3))).passed());
}

TEST(Fixtures, EachBreaksOneRequirement) {
  EXPECT_TRUE(validate_complex(loop_fixture()).passed());
  EXPECT_FALSE(validate_complex(d_squared_fixture()).find("D2_ZERO")->passed);
  EXPECT_FALSE(validate_complex(augmentation_fixture()).find("AUG_KILLS_D1")->passed);
  EXPECT_TRUE(validate_complex(non_unital_fixture()).passed());
}

// Property: compose is associative and unital on random composable triples
// of cube endomaps built from the face and degeneracy structure.
TEST(Compose, PropertyAssociativeOnRandomChains) {
  std::mt19937_64 rng(7);
  BasedComplex c = cube(2);
  auto random_map = [&] {
    MapBuilder b(c, c);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int q = 0; q <= c.top_degree(); ++q)
      for (std::uint32_t i = 0; i < c.count(q); ++i) {
        std::vector<Term> terms;
        for (std::uint32_t j = 0; j < c.count(q); ++j)
          if (Coeff v = coeff(rng); v != 0) terms.push_back({j, v});
        b.set(q, i, Chain(q, terms));
      }
    return b.build();
  };
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMap f = random_map(), g = random_map(), h = random_map();
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    EXPECT_EQ(compose(f, identity_map(c)), f);
  }
}

TEST(Binomial, OracleSelfCheck) {
  EXPECT_EQ(binomial(9, 4), 126);
  EXPECT_EQ(testing::cube_counts_by_enumeration(3)[1], 12u);
}

}  // namespace
}  // namespace steinerlab
