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

#include "oracles.hpp"
#include "zsmagic/constructions.hpp"
#include "zsmagic/errors.hpp"
#include "zsmagic/factors.hpp"
#include "zsmagic/families.hpp"
#include "zsmagic/solver.hpp"
#include "zsmagic/spectra.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic {
namespace {

using testing::complete;
using testing::complete_bipartite;
using testing::cycle;

GroupSpec G(const char* text) { return GroupSpec::parse(text); }

struct Named {
  std::string name;
  Multigraph graph;
};

std::vector<Named> cubic_graphs() {
  std::vector<Named> out;
  for (const std::string& name : fixture_names()) {
    const Multigraph g = fixture(name).graph;
    if (is_cubic(g)) out.push_back({name, g});
  }
  out.push_back({"M1(K4)", m1(complete(4))});
  out.push_back({"M1(PeStar)", m1(fixture("PeStar").graph)});
  out.push_back({"M2(K4)", m2(complete(4))});
  out.push_back({"M1(K33)", m1(complete_bipartite(3, 3))});
  return out;
}

// Graphs with bridges where no bridge leaves a bipartite or trivial side.
std::vector<Named> bridged_unobstructed() {
  std::vector<Named> out;
  for (const char* name : {"G0", "G1", "G4", "G5"}) out.push_back({name, fixture(name).graph});
  std::mt19937_64 rng(41);
  for (int i = 0; i < 6; ++i) {
    out.push_back({"cubic-" + std::to_string(i), testing::random_bridged_regular(rng, 3).graph});
    out.push_back({"quintic-" + std::to_string(i), testing::random_bridged_regular(rng, 5).graph});
  }
  for (const Named& n : out) EXPECT_FALSE(bridge_deletion_obstruction(n.graph)) << n.name;
  return out;
}

TEST(Rrr, G0) {
  const Multigraph g = fixture("G0").graph;
  const Labeling l = construct_rrr(g, 2);
  EXPECT_EQ(l.group, G("Z4^6"));
  EXPECT_TRUE(check_zero_sum(g, l));
}

TEST(Rrr, VerifiesOnBridgedGraphs) {
  for (const Named& n : bridged_unobstructed()) {
    const int bridges = static_cast<int>(find_bridges(n.graph).size());
    for (int j = 2; j <= 5; ++j) {
      SCOPED_TRACE(n.name + " j=" + std::to_string(j));
      const Labeling l = construct_rrr(n.graph, j);
      EXPECT_EQ(l.group, GroupSpec::cyclic_power(2 * j, 3 + bridges));
      EXPECT_TRUE(check_zero_sum(n.graph, l));
    }
  }
}

TEST(Rrr, Errors) {
  EXPECT_THROW(construct_rrr(complete(4), 2), PreconditionError);
  EXPECT_THROW(construct_rrr(martini(), 2), ObstructionError);
  const Multigraph dumbbell = testing::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  EXPECT_THROW(construct_rrr(dumbbell, 3), ObstructionError);
  EXPECT_THROW(construct_rrr(fixture("G0").graph, 1), PreconditionError);
}

TEST(Sss, VerifiesOnBridgedGraphs) {
  for (const Named& n : bridged_unobstructed()) {
    for (int j : {2, 4, 6}) {
      SCOPED_TRACE(n.name + " j=" + std::to_string(j));
      const Labeling l = construct_sss(n.graph, j);
      EXPECT_EQ(l.group, GroupSpec::cyclic_power(2 * j, 6));
      EXPECT_TRUE(check_zero_sum(n.graph, l));
    }
  }
}

TEST(Sss, FiveBridgeQuinticGraph) {
  // One hub with five gadgets: five bridges.
  std::mt19937_64 rng(1);
  for (int tries = 0; tries < 200; ++tries) {
    const testing::BridgedRegular b = testing::random_bridged_regular(rng, 5);
    if (b.hubs != 1) continue;
    EXPECT_EQ(find_bridges(b.graph).size(), 5u);
    const Labeling l = construct_sss(b.graph, 2);
    EXPECT_EQ(l.group, G("Z4^6"));
    EXPECT_TRUE(check_zero_sum(b.graph, l));
    return;
  }
  FAIL() << "generator never produced a single-hub graph";
}

TEST(Sss, Errors) {
  EXPECT_THROW(construct_sss(fixture("G0").graph, 3), PreconditionError);
  EXPECT_THROW(construct_sss(complete(4), 2), PreconditionError);
  EXPECT_THROW(construct_sss(martini(), 2), ObstructionError);
}

TEST(Ppd, VerifiesOnEveryCubicGraph) {
  for (const Named& n : cubic_graphs()) {
    if (!is_connected(n.graph)) continue;
    SCOPED_TRACE(n.name);
    const Labeling l = construct_ppd(n.graph);
    EXPECT_EQ(l.group, G("Z4^3"));
    EXPECT_TRUE(check_zero_sum(n.graph, l));
  }
  EXPECT_THROW(construct_ppd(cycle(4)), PreconditionError);
}

TEST(Ppp, VerifiesOnEveryCubicGraph) {
  for (const Named& n : cubic_graphs()) {
    SCOPED_TRACE(n.name);
    const Labeling l = construct_ppp(n.graph);
    EXPECT_TRUE(check_zero_sum(n.graph, l));
    EXPECT_EQ(l.group, perfect_matching(n.graph) ? G("Z4") : G("Z4^2"));
  }
}

TEST(Ppp, BridgeLabelsComeFromTheThreeEvenPairs) {
  const std::vector<GroupElem> allowed{GroupElem{{2, 2}}, GroupElem{{2, 0}}, GroupElem{{0, 2}}};
  for (const Named& n : cubic_graphs()) {
    if (perfect_matching(n.graph)) continue;
    SCOPED_TRACE(n.name);
    const Labeling l = construct_ppp(n.graph);
    for (EdgeId b : find_bridges(n.graph)) {
      EXPECT_NE(std::find(allowed.begin(), allowed.end(), l[b]), allowed.end());
    }
  }
}

TEST(Ppp, RandomBridgedCubicGraphs) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    const Multigraph g = testing::random_bridged_regular(rng, 3).graph;
    EXPECT_TRUE(check_zero_sum(g, construct_ppp(g)));
    EXPECT_TRUE(check_zero_sum(g, construct_ppd(g)));
  }
}

TEST(Ppp, DisconnectedInput) {
  const Multigraph g = disjoint_union(fixture("G2").graph, complete(4));
  const Labeling l = construct_ppp(g);
  EXPECT_EQ(l.group, G("Z4^2"));
  EXPECT_TRUE(check_zero_sum(g, l));
  EXPECT_THROW(construct_ppp(cycle(3)), PreconditionError);
}

TEST(OneFactorLabeling, TwoOnTheMatchingOneElsewhere) {
  const Multigraph pe = fixture("Petersen").graph;
  const Labeling l = one_factor_z4_labeling(pe);
  int twos = 0;
  for (const GroupElem& a : l.labels) {
    EXPECT_TRUE(a.residues[0] == 1 || a.residues[0] == 2);
    twos += a.residues[0] == 2 ? 1 : 0;
  }
  EXPECT_EQ(twos, 5);
  EXPECT_THROW(one_factor_z4_labeling(fixture("G2").graph), ObstructionError);
}

TEST(Zzz, Examples) {
  for (const Multigraph& g : {fixture("G4").graph, m1(complete(4))}) {
    const Labeling l = construct_zzz(g);
    EXPECT_EQ(l.group, G("Z2^3xZ4"));
    EXPECT_TRUE(check_zero_sum(g, l));
  }
  EXPECT_THROW(construct_zzz(fixture("G2").graph), ObstructionError);
  EXPECT_THROW(construct_zzz(fixture("G3").graph), ObstructionError);
  // A bridgeless graph is a single component with no degree-2 vertices.
  EXPECT_TRUE(check_zero_sum(complete(4), construct_zzz(complete(4))));
}

TEST(Zzz, MatchesTheComponentCondition) {
  for (const Named& n : cubic_graphs()) {
    if (!is_connected(n.graph)) continue;
    SCOPED_TRACE(n.name);
    if (zzz_condition(n.graph)) {
      EXPECT_TRUE(check_zero_sum(n.graph, construct_zzz(n.graph)));
    } else {
      EXPECT_THROW(construct_zzz(n.graph), ObstructionError);
    }
  }
}

TEST(Fff, MartiniFamilyOfColourableBases) {
  for (const Multigraph& base : {complete(4), complete_bipartite(3, 3)}) {
    const MartiniFamilyMember m = m2_detailed(base);
    const Labeling l = construct_fff(base);
    EXPECT_EQ(l.group, G("Z2xZ4"));
    EXPECT_TRUE(check_zero_sum(m.graph, l));
    // Each martini copy is balanced on its own.
    for (const MartiniCopy& c : m.copies) {
      for (VertexId v : {c.a, c.b, c.c}) EXPECT_TRUE(is_zero(weight(m.graph, l, v)));
    }
  }
  EXPECT_EQ(m2(complete(4)).order(), 52);
}

TEST(Fff, RejectsChromaticIndexFour) {
  EXPECT_THROW(construct_fff(fixture("Petersen").graph), ObstructionError);
  EXPECT_THROW(construct_fff(fixture("G2").graph), PreconditionError);
}

Labeling duplicate_first_coordinate(const Labeling& l, int extra) {
  std::vector<Residue> moduli = l.group.moduli();
  moduli.insert(moduli.begin(), extra, moduli.front());
  Labeling out{GroupSpec(moduli), {}};
  for (const GroupElem& a : l.labels) {
    std::vector<Residue> r = a.residues;
    r.insert(r.begin(), extra, r.front());
    out.labels.push_back(GroupElem{r});
  }
  return out;
}

TEST(Lift, IdentityUpToThreeCoordinates) {
  const Multigraph g = fixture("G4").graph;
  const Labeling l = construct_zzz(g);
  const Labeling lifted = lift_lemma(g, l);
  EXPECT_EQ(lifted.labels, l.labels);
}

TEST(Lift, ShrinksWideLabelings) {
  for (const Multigraph& g : {fixture("G4").graph, m1(complete(4)), fixture("Petersen").graph}) {
    const Labeling base = construct_zzz(g);
    const Labeling wide = duplicate_first_coordinate(base, 2);
    ASSERT_EQ(wide.group, G("Z2^5xZ4"));
    ASSERT_TRUE(check_zero_sum(g, wide));
    const Labeling lifted = lift_lemma(g, wide);
    EXPECT_EQ(lifted.group, G("Z2^3xZ4"));
    EXPECT_TRUE(check_zero_sum(g, lifted));
    for (EdgeId e = 0; e < g.size(); ++e) EXPECT_EQ(lifted[e].residues[3], wide[e].residues[5]);
  }
}

TEST(Lift, Errors) {
  const Multigraph g = fixture("G4").graph;
  Labeling bad = construct_zzz(g);
  bad.labels[0] = GroupElem{{0, 0, 0, 0}};
  EXPECT_THROW(lift_lemma(g, bad), PreconditionError);
  EXPECT_THROW(lift_lemma(g, construct_ppp(g)), PreconditionError);
}

TEST(Z2k, MinimalK) {
  EXPECT_EQ(construct_z2k(cycle(4)).k, 1);
  EXPECT_EQ(construct_z2k(complete(4)).k, 2);
  EXPECT_EQ(construct_z2k(fixture("Petersen").graph).k, 3);
  EXPECT_EQ(construct_z2k(fixture("PeStar").graph).k, 3);
  const Z2kResult r = construct_z2k(complete(5));
  EXPECT_EQ(r.k, 1);
  EXPECT_TRUE(check_zero_sum(complete(5), r.labeling));
  EXPECT_THROW(construct_z2k(fixture("G2").graph), PreconditionError);
}

TEST(Z2k, ChromaticIndexDecidesBetweenTwoAndThree) {
  for (const Named& n : cubic_graphs()) {
    if (!find_bridges(n.graph).empty()) continue;
    SCOPED_TRACE(n.name);
    const Z2kResult r = construct_z2k(n.graph);
    EXPECT_EQ(r.k, three_edge_coloring(n.graph) ? 2 : 3);
    EXPECT_TRUE(check_zero_sum(n.graph, r.labeling));
    EXPECT_TRUE(check_zero_sum(n.graph, z2_cubed_labeling(n.graph)));
  }
}

}  // namespace
}  // namespace zsmagic
