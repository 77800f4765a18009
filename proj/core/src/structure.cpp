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

#include "zsmagic/structure.hpp"

#include <algorithm>
#include <string>

#include "zsmagic/errors.hpp"

namespace zsmagic {

std::vector<EdgeId> find_bridges(const Multigraph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeId> bridges;

  // Iterative DFS keyed on the tree edge, so a parallel copy of the tree
  // edge counts as a back edge.
  struct Frame {
    VertexId v;
    EdgeId via;
    std::size_t next;
  };
  int timer = 0;
  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident_edges(f.v);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        const VertexId w = g.endpoints(e).other(f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const VertexId parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > disc[parent]) bridges.push_back(done.via);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

bool is_two_edge_connected(const Multigraph& g) {
  return is_connected(g) && find_bridges(g).empty();
}

const char* to_string(ComponentType t) {
  switch (t) {
    case ComponentType::kTrivial:
      return "I";
    case ComponentType::kCycle:
      return "II";
    case ComponentType::kGeneral:
      return "III";
  }
  return "?";
}

Multigraph Decomposition::tree() const {
  Multigraph t(static_cast<int>(components.size()));
  for (const TreeEdge& te : tree_edges) t.add_edge(te.a, te.b);
  return t;
}

Decomposition decompose(const Multigraph& g) {
  if (!is_connected(g)) throw PreconditionError("decomposition requires a connected graph");
  Decomposition d;
  d.bridges = find_bridges(g);
  d.is_bridge.assign(static_cast<std::size_t>(g.size()), false);
  for (EdgeId b : d.bridges) d.is_bridge[b] = true;

  const Subgraph rest = remove_edges(g, d.is_bridge);
  d.component_of = component_labels(rest.graph);
  const auto parts = components(rest.graph);
  d.components.resize(parts.size());
  for (std::size_t c = 0; c < parts.size(); ++c) d.components[c].vertices = parts[c];

  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.endpoints(e);
    if (d.is_bridge[e]) {
      const int a = d.component_of[u];
      const int b = d.component_of[v];
      d.components[a].bridges.push_back(e);
      d.components[b].bridges.push_back(e);
      d.tree_edges.push_back({std::min(a, b), std::max(a, b), e});
    } else {
      d.components[d.component_of[u]].edges.push_back(e);
    }
  }

  for (auto& comp : d.components) {
    if (comp.vertices.size() == 1) {
      comp.type = ComponentType::kTrivial;
      continue;
    }
    bool all_two = true;
    for (VertexId v : comp.vertices) {
      if (rest.graph.degree(v) != 2) {
        all_two = false;
        break;
      }
    }
    comp.type = all_two ? ComponentType::kCycle : ComponentType::kGeneral;
  }
  return d;
}

Subgraph component_subgraph(const Multigraph& g, const Decomposition& d, int c) {
  std::vector<bool> keep(static_cast<std::size_t>(g.size()), false);
  for (EdgeId e : d.components[c].edges) keep[e] = true;
  return induced_subgraph(g, d.components[c].vertices, &keep);
}

Smoothing smooth_vertices(const Multigraph& g, const std::vector<VertexId>& vertices) {
  std::vector<bool> smoothed(static_cast<std::size_t>(g.order()), false);
  for (VertexId v : vertices) {
    if (!g.has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
    if (g.degree(v) != 2) {
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.degree(v)) + ", cannot smooth");
    }
    smoothed[v] = true;
  }

  Smoothing s;
  s.vertex_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (VertexId v = 0; v < g.order(); ++v) {
    if (smoothed[v]) continue;
    s.vertex_of[v] = static_cast<VertexId>(s.parent_vertex.size());
    s.parent_vertex.push_back(v);
  }
  s.graph = Multigraph(static_cast<int>(s.parent_vertex.size()));
  s.edge_of.assign(static_cast<std::size_t>(g.size()), -1);

  // Walks from `start` across edge `e` through smoothed vertices; returns the
  // far end and appends the traversed edges and interior vertices.
  auto walk = [&](VertexId start, EdgeId e, std::vector<EdgeId>& edges,
                  std::vector<VertexId>& inner) {
    VertexId at = start;
    while (true) {
      edges.push_back(e);
      at = g.endpoints(e).other(at);
      if (!smoothed[at] || at == start) return at;
      inner.push_back(at);
      const auto inc = g.incident_edges(at);
      e = inc[0] == e ? inc[1] : inc[0];
    }
  };

  for (EdgeId e = 0; e < g.size(); ++e) {
    if (s.edge_of[e] != -1) continue;
    const auto [u, v] = g.endpoints(e);
    std::vector<EdgeId> chain;
    std::vector<VertexId> inner;
    VertexId from = u;
    if (smoothed[u]) {
      // Walk backwards from u to find the chain's start.
      std::vector<EdgeId> back;
      std::vector<VertexId> back_inner{u};
      const auto inc = g.incident_edges(u);
      const EdgeId other = inc[0] == e ? inc[1] : inc[0];
      from = walk(u, other, back, back_inner);
      if (from == u) throw PreconditionError("smoothing a cycle of degree-2 vertices");
      std::reverse(back.begin(), back.end());
      std::reverse(back_inner.begin(), back_inner.end());
      chain = std::move(back);
      inner = std::move(back_inner);
    }
    const VertexId to = walk(u, e, chain, inner);
    if (to == u && smoothed[u]) throw PreconditionError("smoothing a cycle of degree-2 vertices");
    if (from == to) {
      throw PreconditionError("smoothing would create a loop at vertex " + std::to_string(from));
    }
    const EdgeId ne = s.graph.add_edge(s.vertex_of[from], s.vertex_of[to]);
    for (EdgeId c : chain) s.edge_of[c] = ne;
    s.chain.push_back(std::move(chain));
    s.interior.push_back(std::move(inner));
  }
  return s;
}

Multigraph smooth_vertex(const Multigraph& g, VertexId v) {
  return smooth_vertices(g, {v}).graph;
}

Smoothing smooth_all(const Multigraph& g) {
  if (g.order() > 0 && (g.min_degree() < 2 || g.max_degree() > 3)) {
    throw PreconditionError("s(G) needs minimum degree >= 2 and maximum degree 3");
  }
  if (g.order() > 0 && g.max_degree() != 3) {
    throw PreconditionError("s(G) needs a vertex of degree 3");
  }
  if (!is_two_edge_connected(g)) throw PreconditionError("s(G) needs a 2-edge-connected graph");
  std::vector<VertexId> twos;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) twos.push_back(v);
  }
  return smooth_vertices(g, twos);
}

Subdivision subdivide(const Multigraph& g, int m) {
  if (m <= 0) throw PreconditionError("subdivision count must be positive");
  Subdivision s;
  s.graph = Multigraph(g.order() + m * g.size());
  s.origin.assign(static_cast<std::size_t>(s.graph.order()), -1);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.endpoints(e);
    std::vector<VertexId> subs;
    std::vector<EdgeId> path;
    VertexId prev = u;
    for (int i = 0; i < m; ++i) {
      const VertexId w = g.order() + e * m + i;
      s.origin[w] = e;
      subs.push_back(w);
      path.push_back(s.graph.add_edge(prev, w));
      prev = w;
    }
    path.push_back(s.graph.add_edge(prev, v));
    s.subdividers.push_back(std::move(subs));
    s.path.push_back(std::move(path));
  }
  return s;
}

}  // namespace zsmagic
