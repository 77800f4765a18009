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

#include "zsmagic/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "zsmagic/errors.hpp"

namespace zsmagic {

Multigraph::Multigraph(int order) {
  if (order < 0) throw PreconditionError("negative vertex count");
  incidence_.resize(static_cast<std::size_t>(order));
}

VertexId Multigraph::add_vertex() {
  incidence_.emplace_back();
  return order() - 1;
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw PreconditionError("edge endpoint " + std::to_string(has_vertex(u) ? v : u) +
                            " is not a vertex");
  }
  if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
  const EdgeId e = size();
  edges_.push_back({u, v});
  incidence_[static_cast<std::size_t>(u)].push_back(e);
  incidence_[static_cast<std::size_t>(v)].push_back(e);
  return e;
}

const Endpoints& Multigraph::endpoints(EdgeId e) const {
  if (!has_edge(e)) throw PreconditionError("unknown edge " + std::to_string(e));
  return edges_[static_cast<std::size_t>(e)];
}

std::span<const EdgeId> Multigraph::incident_edges(VertexId v) const {
  if (!has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
  return incidence_[static_cast<std::size_t>(v)];
}

int Multigraph::degree(VertexId v) const {
  return static_cast<int>(incident_edges(v).size());
}

int Multigraph::min_degree() const {
  int best = order() == 0 ? 0 : degree(0);
  for (VertexId v = 1; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

int Multigraph::max_degree() const {
  int best = 0;
  for (VertexId v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

bool is_regular(const Multigraph& g, int r) {
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) != r) return false;
  }
  return true;
}

std::vector<int> component_labels(const Multigraph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident_edges(v)) {
        const VertexId w = g.endpoints(e).other(v);
        if (label[w] == -1) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<VertexId>> components(const Multigraph& g) {
  const auto label = component_labels(g);
  const int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<VertexId>> out(static_cast<std::size_t>(count));
  for (VertexId v = 0; v < g.order(); ++v) out[label[v]].push_back(v);
  return out;
}

bool is_connected(const Multigraph& g) { return components(g).size() <= 1; }

namespace {

// Two-colours every component; returns false on an odd cycle.
bool two_colour(const Multigraph& g, std::vector<int>& colour) {
  colour.assign(static_cast<std::size_t>(g.order()), -1);
  std::deque<VertexId> queue;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident_edges(v)) {
        const VertexId w = g.endpoints(e).other(v);
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::optional<Bipartition> is_bipartite_with_parts(const Multigraph& g) {
  if (!is_connected(g)) throw PreconditionError("bipartition requires a connected graph");
  std::vector<int> colour;
  if (!two_colour(g, colour)) return std::nullopt;
  Bipartition parts;
  for (VertexId v = 0; v < g.order(); ++v) (colour[v] == 0 ? parts.x : parts.y).push_back(v);
  return parts;
}

bool is_bipartite(const Multigraph& g) {
  std::vector<int> colour;
  return two_colour(g, colour);
}

Subgraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices,
                          const std::vector<bool>* keep_edge) {
  Subgraph sub;
  sub.graph = Multigraph(static_cast<int>(vertices.size()));
  sub.parent_vertex.assign(vertices.begin(), vertices.end());
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (keep_edge != nullptr && !(*keep_edge)[e]) continue;
    const auto [u, v] = g.endpoints(e);
    if (local[u] < 0 || local[v] < 0) continue;
    sub.graph.add_edge(local[u], local[v]);
    sub.parent_edge.push_back(e);
  }
  return sub;
}

Subgraph remove_edges(const Multigraph& g, const std::vector<bool>& removed) {
  Subgraph sub;
  sub.graph = Multigraph(g.order());
  for (VertexId v = 0; v < g.order(); ++v) sub.parent_vertex.push_back(v);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (removed[e]) continue;
    sub.graph.add_edge(g.endpoints(e).u, g.endpoints(e).v);
    sub.parent_edge.push_back(e);
  }
  return sub;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  Multigraph out(a.order() + b.order());
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

std::optional<std::vector<EdgeId>> shortest_path(const Multigraph& g, VertexId from, VertexId to,
                                                 const std::vector<bool>* allowed) {
  if (!g.has_vertex(from) || !g.has_vertex(to)) throw PreconditionError("unknown path endpoint");
  std::vector<EdgeId> via(static_cast<std::size_t>(g.order()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident_edges(v)) {
      if (allowed != nullptr && !(*allowed)[e]) continue;
      const VertexId w = g.endpoints(e).other(v);
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = e;
      queue.push_back(w);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<EdgeId> path;
  for (VertexId v = to; v != from;) {
    path.push_back(via[v]);
    v = g.endpoints(via[v]).other(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace zsmagic
