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
#include <random>

#include "oracles.hpp"
#include "zsmagic/errors.hpp"
#include "zsmagic/families.hpp"
#include "zsmagic/graph_io.hpp"
#include "zsmagic/multigraph.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic {
namespace {

using testing::complete;
using testing::complete_bipartite;
using testing::cycle;

TEST(Multigraph, MartiniDegrees) {
  const Multigraph g = martini();
  std::vector<int> degrees;
  for (VertexId v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  EXPECT_EQ(degrees, (std::vector<int>{3, 3, 3, 1}));
  EXPECT_EQ(g.incident_edges(3).size(), 1u);
  EXPECT_FALSE(is_regular(g, 3));
}

TEST(Multigraph, DigonKeepsParallelEdgesDistinct) {
  const Multigraph g = cycle(2);
  EXPECT_EQ(g.degree(0), 2);
  const auto inc = g.incident_edges(1);
  ASSERT_EQ(inc.size(), 2u);
  EXPECT_NE(inc[0], inc[1]);
}

TEST(Multigraph, SingleVertex) {
  const Multigraph g(1);
  EXPECT_EQ(g.degree(0), 0);
  EXPECT_TRUE(is_regular(g, 0));
}

TEST(Multigraph, RejectsLoopsAndUnknownVertices) {
  Multigraph g(2);
  EXPECT_THROW(g.add_edge(1, 1), PreconditionError);
  EXPECT_THROW(g.add_edge(0, 2), PreconditionError);
  EXPECT_THROW(g.degree(5), PreconditionError);
  EXPECT_THROW(g.incident_edges(-1), PreconditionError);
}

TEST(Multigraph, TriangleIncidence) {
  const Multigraph g = complete(3);
  for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(g.incident_edges(v).size(), 2u);
}

TEST(Multigraph, PetersenIsCubic) { EXPECT_TRUE(is_regular(fixture("Petersen").graph, 3)); }

TEST(Multigraph, Components) {
  EXPECT_EQ(components(complete(3)).size(), 1u);
  const Multigraph two = disjoint_union(complete(3), complete(3));
  const auto comps = components(two);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(comps[1], (std::vector<VertexId>{3, 4, 5}));
}

TEST(Multigraph, G0WithoutBridgesHasFourComponents) {
  const Multigraph g = fixture("G0").graph;
  std::vector<bool> removed(static_cast<std::size_t>(g.size()), false);
  for (EdgeId b : find_bridges(g)) removed[b] = true;
  EXPECT_EQ(components(remove_edges(g, removed).graph).size(), 4u);
}

TEST(Multigraph, Bipartition) {
  const auto digon = is_bipartite_with_parts(cycle(2));
  ASSERT_TRUE(digon);
  EXPECT_EQ(digon->x.size(), 1u);
  EXPECT_EQ(digon->y.size(), 1u);
  EXPECT_FALSE(is_bipartite_with_parts(complete(3)));
  const auto k23 = is_bipartite_with_parts(complete_bipartite(2, 3));
  ASSERT_TRUE(k23);
  EXPECT_EQ(std::min(k23->x.size(), k23->y.size()), 2u);
  EXPECT_EQ(std::max(k23->x.size(), k23->y.size()), 3u);
}

TEST(Multigraph, BipartitionNeedsConnectedInput) {
  EXPECT_THROW(is_bipartite_with_parts(disjoint_union(cycle(2), cycle(2))), PreconditionError);
}

// Degree sum, component partition and bipartition soundness on every fixture
// and on random graphs.
void check_basic_invariants(const Multigraph& g) {
  int sum = 0;
  for (VertexId v = 0; v < g.order(); ++v) sum += g.degree(v);
  EXPECT_EQ(sum, 2 * g.size());

  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (const auto& comp : components(g)) {
    for (VertexId v : comp) ++hits[v];
  }
  EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));

  if (is_connected(g)) {
    if (const auto parts = is_bipartite_with_parts(g)) {
      std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
      for (VertexId v : parts->x) side[v] = 0;
      for (VertexId v : parts->y) side[v] = 1;
      for (const Endpoints& e : g.edges()) EXPECT_NE(side[e.u], side[e.v]);
      EXPECT_EQ(parts->x.size() + parts->y.size(), static_cast<std::size_t>(g.order()));
    }
  }
}

TEST(MultigraphProperty, FixtureInvariants) {
  for (const std::string& name : fixture_names()) {
    SCOPED_TRACE(name);
    check_basic_invariants(fixture(name).graph);
  }
}

TEST(MultigraphProperty, RandomInvariants) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Multigraph g = testing::random_subcubic(rng, 20);
    check_basic_invariants(g);
    check_basic_invariants(disjoint_union(g, cycle(3)));
  }
}

TEST(GraphIo, RoundTripKeepsEdgeOrder) {
  const Multigraph g = fixture("G1").graph;
  EXPECT_EQ(parse_graph(format_graph(g)), g);
}

TEST(GraphIo, ParsesCommentsAndParallelEdges) {
  const Multigraph g = parse_graph("# digon\nn 2\ne 0 1\ne 0 1  # again\n");
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.degree(0), 2);
}

TEST(GraphIo, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph("e 0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("n 2\ne 0 0\n"), ParseError);
  EXPECT_THROW(parse_graph("n 2\ne 0 2\n"), ParseError);
  EXPECT_THROW(parse_graph("n 2\nx 0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("n two\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

int occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

TEST(GraphIo, DotListsEveryEdge) {
  const Multigraph g = cycle(2);
  EXPECT_EQ(occurrences(to_dot(g), " -- "), 2);
  const Labeling l = testing::constant_labeling(GroupSpec::parse("Z2xZ4"), 2, 1);
  EXPECT_EQ(occurrences(to_dot(g, &l), "label=\"(1,1)\""), 2);
}

}  // namespace
}  // namespace zsmagic
