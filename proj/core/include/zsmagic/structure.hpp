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

#ifndef ZSMAGIC_STRUCTURE_HPP_
#define ZSMAGIC_STRUCTURE_HPP_

#include <utility>
#include <vector>

#include "zsmagic/multigraph.hpp"

namespace zsmagic {

/// Bridges of `g` in increasing edge-id order. Linear time; parallel edges
/// are never bridges.
std::vector<EdgeId> find_bridges(const Multigraph& g);

/// True when `g` is connected and has no bridge (K_1 included).
bool is_two_edge_connected(const Multigraph& g);

enum class ComponentType {
  kTrivial,  // Type I: K_1
  kCycle,    // Type II: C_m, m >= 2
  kGeneral,  // Type III: anything else (2-edge-connected, max degree 3 on cubic input)
};

const char* to_string(ComponentType t);

struct BridgeComponent {
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeId> edges;       // non-bridge edges inside, sorted
  std::vector<EdgeId> bridges;     // incident bridges, sorted
  ComponentType type = ComponentType::kTrivial;
};

struct TreeEdge {
  int a = 0;  // component indices, a < b
  int b = 0;
  EdgeId bridge = 0;
};

/// Bridge decomposition: the components H_0..H_b of G - B(G) and the tree
/// T_G joining them through the bridges.
struct Decomposition {
  std::vector<EdgeId> bridges;
  std::vector<bool> is_bridge;           // indexed by EdgeId
  std::vector<BridgeComponent> components;  // ordered by smallest vertex
  std::vector<int> component_of;         // vertex -> component index
  std::vector<TreeEdge> tree_edges;      // one per bridge, in bridge order

  int tree_degree(int c) const { return static_cast<int>(components[c].bridges.size()); }
  bool is_leaf(int c) const { return tree_degree(c) == 1; }
  /// The tree T_G as a graph on component indices.
  Multigraph tree() const;
};

/// Throws PreconditionError on a disconnected graph.
Decomposition decompose(const Multigraph& g);

/// Component `c` of G - B(G) as a standalone graph.
Subgraph component_subgraph(const Multigraph& g, const Decomposition& d, int c);

/// Result of smoothing a set of degree-2 vertices. Each edge of `graph`
/// replaces a chain of parent edges running through smoothed vertices.
struct Smoothing {
  Multigraph graph;
  std::vector<VertexId> parent_vertex;            // new vertex -> parent vertex
  std::vector<VertexId> vertex_of;                // parent vertex -> new vertex or -1
  std::vector<std::vector<EdgeId>> chain;         // new edge -> parent edges, end to end
  std::vector<std::vector<VertexId>> interior;    // new edge -> smoothed vertices on it
  std::vector<EdgeId> edge_of;                    // parent edge -> new edge
};

/// Smooths every vertex in `vertices` (each must have degree 2). Throws
/// PreconditionError when a smoothing would create a loop.
Smoothing smooth_vertices(const Multigraph& g, const std::vector<VertexId>& vertices);

/// Replaces degree-2 vertex `v` and its two edges by one edge between its
/// neighbours.
Multigraph smooth_vertex(const Multigraph& g, VertexId v);

/// s(G): smooths every degree-2 vertex. Requires a 2-edge-connected graph
/// with minimum degree >= 2 and maximum degree 3; cubic input comes back
/// unchanged.
Smoothing smooth_all(const Multigraph& g);

struct Subdivision {
  Multigraph graph;
  // Original vertices keep their ids. Subdividers of edge e are
  // `order + e*m .. order + e*m + m - 1`, listed from endpoint u towards v.
  std::vector<std::vector<VertexId>> subdividers;  // per original edge
  std::vector<std::vector<EdgeId>> path;           // per original edge, u towards v
  std::vector<EdgeId> origin;                      // new vertex -> original edge, -1 if original
};

/// m-subdivision; m must be positive.
Subdivision subdivide(const Multigraph& g, int m);

/// Pairwise vertex-disjoint paths whose end vertices are exactly the
/// degree-2 vertices of the graph.
struct Threading {
  std::vector<std::vector<EdgeId>> paths;               // edges from first to second endpoint
  std::vector<std::pair<VertexId, VertexId>> endpoints;
};

/// Builds a threading of a connected graph with minimum degree 2, maximum
/// degree at most 3 and an even number of degree-2 vertices.
Threading threading(const Multigraph& g);

/// Checks disjointness, endpoint coverage and path shape.
bool validate_threading(const Multigraph& g, const Threading& t);

}  // namespace zsmagic

#endif  // ZSMAGIC_STRUCTURE_HPP_
