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

#include <algorithm>

#include "oracles.hpp"
#include "zsmagic/errors.hpp"
#include "zsmagic/factors.hpp"
#include "zsmagic/families.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic {
namespace {

using testing::complete;
using testing::complete_bipartite;

std::vector<int> sorted_degrees(const Multigraph& g) {
  std::vector<int> d;
  for (VertexId v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

TEST(Martini, Shape) {
  const Multigraph g = martini();
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 5);
  EXPECT_EQ(sorted_degrees(g), (std::vector<int>{1, 3, 3, 3}));
  EXPECT_EQ(find_bridges(g).size(), 1u);
}

TEST(AttachMartinis, TriangleGivesG0) {
  const Multigraph g = attach_martinis(complete(3), {0, 1, 2});
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.size(), 18);
  EXPECT_TRUE(is_cubic(g));
  EXPECT_EQ(find_bridges(g).size(), 3u);
  const Multigraph g0 = fixture("G0").graph;
  EXPECT_EQ(sorted_degrees(g), sorted_degrees(g0));
  EXPECT_EQ(find_bridges(g).size(), find_bridges(g0).size());
}

TEST(AttachMartinis, EmptyListAndSingleVertex) {
  const Multigraph k4 = complete(4);
  EXPECT_EQ(attach_martinis(k4, {}), k4);
  const Multigraph single = attach_martinis(Multigraph(1), {0});
  EXPECT_EQ(single.order(), 4);
  EXPECT_EQ(single.size(), 5);
  EXPECT_EQ(sorted_degrees(single), (std::vector<int>{1, 3, 3, 3}));
}

TEST(AttachMartinis, RejectsRepeatsAndUnknownVertices) {
  EXPECT_THROW(attach_martinis(complete(3), {0, 0}), PreconditionError);
  EXPECT_THROW(attach_martinis(complete(3), {7}), PreconditionError);
}

TEST(AttachMartinis, CopiesRecordTheirEdges) {
  const MartiniAttachment a = attach_martinis_detailed(complete(3), {2, 0});
  ASSERT_EQ(a.copies.size(), 2u);
  EXPECT_EQ(a.copies[0].host, 2);
  EXPECT_EQ(a.copies[1].host, 0);
  for (const MartiniCopy& c : a.copies) {
    const auto& ends = a.graph.endpoints(c.edges[4]);
    EXPECT_TRUE((ends.u == c.c && ends.v == c.host) || (ends.u == c.host && ends.v == c.c));
    EXPECT_EQ(a.graph.degree(c.a), 3);
    EXPECT_EQ(a.graph.degree(c.b), 3);
  }
}

struct FamilyCase {
  const char* base;
  Multigraph graph;
};

std::vector<FamilyCase> bases() {
  return {{"K4", fixture("K4").graph},
          {"Petersen", fixture("Petersen").graph},
          {"PeStar", fixture("PeStar").graph},
          {"K33", complete_bipartite(3, 3)}};
}

TEST(M1, Counts) {
  for (const auto& [name, g] : bases()) {
    SCOPED_TRACE(name);
    const Multigraph m = m1(g);
    EXPECT_EQ(m.order(), 7 * g.order());
    EXPECT_EQ(m.size(), 7 * g.size());
    EXPECT_EQ(static_cast<int>(find_bridges(m).size()), g.size());
    EXPECT_TRUE(is_cubic(m));
    EXPECT_FALSE(perfect_matching(m));
  }
  EXPECT_EQ(m1(fixture("PeStar").graph).order(), 84);
  const Multigraph mk4 = m1(complete(4));
  EXPECT_EQ(mk4.order(), 28);
  EXPECT_EQ(testing::bridges_by_deletion(mk4).size(), 6u);
  EXPECT_FALSE(testing::has_perfect_matching_exhaustive(mk4));
}

TEST(M1, ExactlyOneBipartiteComponent) {
  for (const auto& [name, g] : bases()) {
    SCOPED_TRACE(name);
    const Multigraph m = m1(g);
    const Decomposition d = decompose(m);
    int bipartite = 0;
    for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
      const Subgraph h = component_subgraph(m, d, c);
      if (is_bipartite(h.graph)) {
        ++bipartite;
        EXPECT_EQ(h.graph.order(), g.order() + g.size());
      } else {
        EXPECT_EQ(h.graph.order(), 3);  // martini top
      }
    }
    EXPECT_EQ(bipartite, 1);
  }
}

TEST(M2, Counts) {
  for (const auto& [name, g] : bases()) {
    SCOPED_TRACE(name);
    const Multigraph m = m2(g);
    EXPECT_EQ(m.order(), 13 * g.order());
    EXPECT_EQ(static_cast<int>(find_bridges(m).size()), 2 * g.size());
    EXPECT_TRUE(is_cubic(m));
    EXPECT_FALSE(perfect_matching(m));
  }
  EXPECT_EQ(m2(fixture("Petersen").graph).order(), 130);
  EXPECT_EQ(m2(complete(4)).order(), 52);
}

TEST(M2, SubdivisionSideIsBipartiteIffBaseIs) {
  for (const auto& [name, g, expect] :
       std::vector<std::tuple<const char*, Multigraph, bool>>{{"K4", complete(4), false},
                                                              {"K33", complete_bipartite(3, 3), true}}) {
    SCOPED_TRACE(name);
    const MartiniFamilyMember m = m2_detailed(g);
    const Decomposition d = decompose(m.graph);
    const Subgraph h = component_subgraph(m.graph, d, d.component_of[0]);
    EXPECT_EQ(h.graph.order(), g.order() + 2 * g.size());
    EXPECT_EQ(is_bipartite(h.graph), expect);
  }
}

TEST(MartiniFamilies, RejectNonCubicOrBridgedBases) {
  EXPECT_THROW(m1(fixture("G2").graph), PreconditionError);
  EXPECT_THROW(m2(fixture("K23").graph), PreconditionError);
  EXPECT_THROW(m1(testing::cycle(4)), PreconditionError);
}

TEST(Fixtures, RecordsMatchTheGraphs) {
  for (const std::string& name : fixture_names()) {
    SCOPED_TRACE(name);
    const Fixture f = fixture(name);
    EXPECT_EQ(f.graph.order(), f.expected.order);
    EXPECT_EQ(f.graph.size(), f.expected.size);
    EXPECT_EQ(static_cast<int>(testing::bridges_by_deletion(f.graph).size()), f.expected.bridges);
    if (f.graph.order() <= 18) {
      EXPECT_EQ(testing::has_perfect_matching_exhaustive(f.graph), f.expected.has_one_factor);
    }
    if (is_cubic(f.graph) && f.graph.size() <= 30) {
      EXPECT_EQ(testing::three_colourable_exhaustive(f.graph), f.expected.chromatic_index == 3);
    }
  }
}

TEST(Fixtures, Specifics) {
  const Fixture g2 = fixture("G2");
  EXPECT_EQ(g2.graph.order(), 16);
  EXPECT_EQ(g2.graph.size(), 24);
  EXPECT_TRUE(is_cubic(g2.graph));
  EXPECT_FALSE(g2.expected.has_one_factor);
  EXPECT_EQ(fixture("PeStar").expected.chromatic_index, 4);
  EXPECT_EQ(fixture("Petersen").graph.size(), 15);
  EXPECT_EQ(fixture("Petersen").expected.chromatic_index, 4);
  EXPECT_THROW(fixture("G9"), PreconditionError);
}

TEST(Fixtures, G3HasAK23Component) {
  const Multigraph g = fixture("G3").graph;
  const Decomposition d = decompose(g);
  bool found = false;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const Subgraph h = component_subgraph(g, d, c);
    if (h.graph.order() == 5 && h.graph.size() == 6 && is_bipartite(h.graph)) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Fixtures, ReferenceLabelsCoverG1) {
  const Labeling l = g1_reference_labels();
  EXPECT_EQ(l.size(), 27u);
  EXPECT_EQ(l.group, GroupSpec::parse("Z4"));
}

}  // namespace
}  // namespace zsmagic
