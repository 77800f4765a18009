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

#ifndef ZSMAGIC_MULTIGRAPH_HPP_
#define ZSMAGIC_MULTIGRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace zsmagic {

using VertexId = int;
using EdgeId = int;

struct Endpoints {
  VertexId u = 0;
  VertexId v = 0;

  // The endpoint of the edge that is not `w`. `w` must be an endpoint.
  VertexId other(VertexId w) const { return w == u ? v : u; }
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// Finite loopless undirected multigraph.
///
/// Vertices are `0..order()-1`. Edges are numbered in insertion order and
/// parallel edges get distinct ids, so every algorithm in the library
/// iterates edges rather than vertex pairs. Incidence lists are kept in
/// increasing edge-id order, which makes all traversals deterministic.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int order);

  // Throws PreconditionError on loops or unknown endpoints.
  EdgeId add_edge(VertexId u, VertexId v);
  VertexId add_vertex();

  int order() const { return static_cast<int>(incidence_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(VertexId v) const { return v >= 0 && v < order(); }
  bool has_edge(EdgeId e) const { return e >= 0 && e < size(); }

  const Endpoints& endpoints(EdgeId e) const;
  std::span<const Endpoints> edges() const { return edges_; }

  std::span<const EdgeId> incident_edges(VertexId v) const;
  int degree(VertexId v) const;

  int min_degree() const;
  int max_degree() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<Endpoints> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

bool is_regular(const Multigraph& g, int r);
inline bool is_cubic(const Multigraph& g) { return is_regular(g, 3); }

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<VertexId>> components(const Multigraph& g);

/// Component index of every vertex, numbered as in `components`.
std::vector<int> component_labels(const Multigraph& g);

bool is_connected(const Multigraph& g);

struct Bipartition {
  std::vector<VertexId> x;  // contains the smallest vertex
  std::vector<VertexId> y;
};

/// Two-colouring of a connected multigraph, or nullopt when an odd cycle
/// exists. Throws PreconditionError on disconnected input.
std::optional<Bipartition> is_bipartite_with_parts(const Multigraph& g);

/// Bipartiteness check that accepts any graph.
bool is_bipartite(const Multigraph& g);

/// A subgraph carried together with the maps back into its parent graph.
struct Subgraph {
  Multigraph graph;
  std::vector<VertexId> parent_vertex;  // local vertex -> parent vertex
  std::vector<EdgeId> parent_edge;      // local edge -> parent edge
};

/// Subgraph induced by `vertices` (kept in the given order), restricted to
/// edges accepted by `keep_edge` when supplied.
Subgraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices,
                          const std::vector<bool>* keep_edge = nullptr);

/// Copy of `g` without the edges flagged in `removed`; vertex ids unchanged.
Subgraph remove_edges(const Multigraph& g, const std::vector<bool>& removed);

/// Disjoint union; vertices and edges of `b` are shifted after those of `a`.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// Shortest path (fewest edges) from `from` to `to` using edges accepted by
/// `allowed` (all edges when null). Returns the edge sequence, or nullopt.
std::optional<std::vector<EdgeId>> shortest_path(const Multigraph& g, VertexId from, VertexId to,
                                                 const std::vector<bool>* allowed = nullptr);

}  // namespace zsmagic

#endif  // ZSMAGIC_MULTIGRAPH_HPP_
