// Copyright 2026 The zsmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <random>
#include <set>

#include "zsmagic/errors.hpp"
#include "zsmagic/groups.hpp"

namespace zsmagic {
namespace {

GroupElem el(std::vector<Residue> r) { return GroupElem{std::move(r)}; }

TEST(Groups, Addition) {
  const GroupSpec z4 = GroupSpec::parse("Z4");
  EXPECT_EQ(add(z4, el({3}), el({3})), el({2}));
  const GroupSpec z2z4 = GroupSpec::parse("Z2xZ4");
  EXPECT_EQ(add(z2z4, el({1, 3}), el({1, 1})), el({0, 0}));
  const GroupSpec z6 = GroupSpec::parse("Z6");
  EXPECT_EQ(add(z6, el({3}), el({3})), el({0}));
}

TEST(Groups, ScalarMultiplication) {
  const GroupSpec z4 = GroupSpec::parse("Z4");
  EXPECT_EQ(scalar_mul(z4, 2, el({1})), el({2}));
  EXPECT_EQ(scalar_mul(z4, 0, el({3})), el({0}));
  // Scaling a Z_2^3 element by 3 lands in Z_6^3.
  const GroupSpec z6cubed = GroupSpec::cyclic_power(6, 3);
  EXPECT_EQ(scalar_mul(z6cubed, 3, el({1, 0, 1})), el({3, 0, 3}));
  EXPECT_EQ(scalar_mul(z4, -1, el({1})), el({3}));
}

TEST(Groups, IsZero) {
  EXPECT_TRUE(is_zero(el({0, 0})));
  EXPECT_FALSE(is_zero(el({0, 2})));
  EXPECT_TRUE(is_zero(GroupSpec::parse("Z6").make({6})));
}

TEST(Groups, EnumerateNonzero) {
  EXPECT_EQ(enumerate_nonzero(GroupSpec::parse("Z2")), (std::vector<GroupElem>{el({1})}));
  EXPECT_EQ(enumerate_nonzero(GroupSpec::parse("Z2xZ4")).size(), 7u);
  EXPECT_EQ(enumerate_nonzero(GroupSpec::parse("Z4")), (std::vector<GroupElem>{el({1}), el({2}), el({3})}));
  EXPECT_THROW(enumerate_nonzero(GroupSpec::parse("Z2^21")), PreconditionError);
}

TEST(Groups, EnumerationIsCompleteAndDistinct) {
  const GroupSpec g = GroupSpec::parse("Z3xZ2^2xZ5");
  const auto all = enumerate_nonzero(g);
  EXPECT_EQ(static_cast<std::int64_t>(all.size()), g.order() - 1);
  const std::set<GroupElem> distinct(all.begin(), all.end());
  EXPECT_EQ(distinct.size(), all.size());
  for (const GroupElem& a : all) {
    EXPECT_TRUE(g.conforms(a));
    EXPECT_FALSE(is_zero(a));
  }
}

TEST(Groups, ParseAndPrint) {
  EXPECT_EQ(GroupSpec::parse("Z4").moduli(), (std::vector<Residue>{4}));
  EXPECT_EQ(GroupSpec::parse("Z2^3").moduli(), (std::vector<Residue>{2, 2, 2}));
  EXPECT_EQ(GroupSpec::parse("Z2^3xZ4").moduli(), (std::vector<Residue>{2, 2, 2, 4}));
  EXPECT_EQ(GroupSpec::parse("Z2^3xZ4").to_string(), "Z2^3xZ4");
  EXPECT_EQ(GroupSpec::parse("Z2xZ2xZ4").to_string(), "Z2^2xZ4");
  EXPECT_EQ(GroupSpec::parse("Z4xZ2").moduli(), (std::vector<Residue>{4, 2}));
  EXPECT_EQ(GroupSpec::parse("Z2^3xZ4").order(), 32);
}

TEST(Groups, ParseRejectsBadSyntax) {
  for (const char* bad : {"Z1", "Z0", "Z2^0", "Z2^-1", "Z", "4", "Z4x", "xZ4", "Z4*Z2", "", "Z2^", "z4"}) {
    SCOPED_TRACE(bad);
    EXPECT_THROW(GroupSpec::parse(bad), ParseError);
  }
}

TEST(Groups, ConstructorRejectsDegenerateGroups) {
  EXPECT_THROW(GroupSpec({}), PreconditionError);
  EXPECT_THROW(GroupSpec({1}), PreconditionError);
  EXPECT_THROW(GroupSpec::cyclic_power(4, 0), PreconditionError);
  EXPECT_THROW(GroupSpec(std::vector<Residue>(70, 2)), PreconditionError);
}

TEST(Groups, ArityMismatch) {
  const GroupSpec z4 = GroupSpec::parse("Z4");
  EXPECT_THROW(add(z4, el({1, 1}), el({1})), PreconditionError);
  EXPECT_THROW(z4.make({1, 2}), PreconditionError);
}

class GroupAxioms : public ::testing::TestWithParam<const char*> {};

GroupElem random_elem(const GroupSpec& g, std::mt19937_64& rng) {
  std::vector<Residue> r;
  for (Residue n : g.moduli()) r.push_back(std::uniform_int_distribution<Residue>(0, n - 1)(rng));
  return GroupElem{r};
}

TEST_P(GroupAxioms, HoldOnRandomTriples) {
  const GroupSpec g = GroupSpec::parse(GetParam());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const GroupElem a = random_elem(g, rng);
    const GroupElem b = random_elem(g, rng);
    const GroupElem c = random_elem(g, rng);
    EXPECT_EQ(add(g, add(g, a, b), c), add(g, a, add(g, b, c)));
    EXPECT_EQ(add(g, a, b), add(g, b, a));
    EXPECT_EQ(add(g, a, g.zero()), a);
    EXPECT_TRUE(is_zero(add(g, a, negate(g, a))));
  }
}

TEST_P(GroupAxioms, ScalarIsRepeatedAddition) {
  const GroupSpec g = GroupSpec::parse(GetParam());
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const GroupElem a = random_elem(g, rng);
    GroupElem sum = g.zero();
    for (int k = 0; k <= 20; ++k) {
      EXPECT_EQ(scalar_mul(g, k, a), sum);
      sum = add(g, sum, a);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Specs, GroupAxioms,
                         ::testing::Values("Z2", "Z3", "Z4", "Z6", "Z2^2", "Z2xZ4", "Z4^3", "Z2^3xZ4", "Z12xZ9"));

}  // namespace
}  // namespace zsmagic
