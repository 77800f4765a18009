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


#include "gadgets.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "zsmagic/constructions.hpp"
#include "zsmagic/errors.hpp"

namespace zsmagic::detail {

std::optional<OddCycleRoute> odd_cycle_route(const Multigraph& g, VertexId start,
                                             const std::vector<bool>& allowed) {
  std::vector<int> level(static_cast<std::size_t>(g.order()), -1);
  std::vector<EdgeId> up(static_cast<std::size_t>(g.order()), -1);
  std::deque<VertexId> queue{start};
  level[start] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident_edges(v)) {
      if (!allowed[e]) continue;
      const VertexId w = g.endpoints(e).other(v);
      if (level[w] != -1) continue;
      level[w] = level[v] + 1;
      up[w] = e;
      queue.push_back(w);
    }
  }
  // An edge inside one BFS layer closes an odd cycle through the common
  // ancestor of its ends.
  EdgeId chord = -1;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!allowed[e]) continue;
    const auto [u, w] = g.endpoints(e);
    if (level[u] == -1 || level[u] != level[w]) continue;
    if (chord == -1 || level[u] < level[g.endpoints(chord).u]) chord = e;
  }
  if (chord == -1) return std::nullopt;

  VertexId a = g.endpoints(chord).u;
  VertexId b = g.endpoints(chord).v;
  std::vector<EdgeId> down_a;  // from a upwards
  std::vector<EdgeId> down_b;
  while (a != b) {
    down_a.push_back(up[a]);
    a = g.endpoints(up[a]).other(a);
    down_b.push_back(up[b]);
    b = g.endpoints(up[b]).other(b);
  }
  OddCycleRoute route;
  route.attach = a;
  for (VertexId v = a; v != start; v = g.endpoints(up[v]).other(v)) route.path.push_back(up[v]);
  std::reverse(route.path.begin(), route.path.end());
  route.cycle.assign(down_a.rbegin(), down_a.rend());
  route.cycle.push_back(chord);
  route.cycle.insert(route.cycle.end(), down_b.begin(), down_b.end());
  return route;
}

std::vector<std::vector<Residue>> component_z2_cubed(const Multigraph& g, const Decomposition& d,
                                                     const SolveOptions& options) {
  std::vector<std::vector<Residue>> cols(3, std::vector<Residue>(static_cast<std::size_t>(g.size()), 0));
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    if (d.components[c].edges.empty()) continue;
    const Subgraph h = component_subgraph(g, d, c);
    const Labeling l = z2_cubed_labeling(h.graph, options);
    for (EdgeId e = 0; e < h.graph.size(); ++e) {
      for (int i = 0; i < 3; ++i) cols[i][h.parent_edge[e]] = l[e].residues[i];
    }
  }
  return cols;
}

LeafContraction contract_leaves(const Multigraph& g, const Decomposition& d) {
  LeafContraction out;
  std::vector<bool> drop(static_cast<std::size_t>(g.order()), false);
  std::vector<bool> is_y(static_cast<std::size_t>(g.order()), false);
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    if (!d.is_leaf(c)) continue;
    const EdgeId b = d.components[c].bridges.front();
    const auto [u, v] = g.endpoints(b);
    const VertexId y = d.component_of[u] == c ? u : v;
    out.leaves.push_back(c);
    out.leaf_bridge.push_back(b);
    out.y.push_back(y);
    for (VertexId w : d.components[c].vertices) drop[w] = w != y;
    is_y[y] = true;
  }
  if (out.leaves.size() < 2) throw PreconditionError("the bridge tree needs at least two leaves");

  std::vector<VertexId> map(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!drop[v] && !is_y[v]) map[v] = next++;
  }
  const VertexId merged_y = next++;
  for (VertexId y : out.y) map[y] = merged_y;
  out.merged = Multigraph(next);
  out.in_star.assign(static_cast<std::size_t>(g.size()), false);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.endpoints(e);
    if (drop[u] || drop[v]) continue;
    // Edges inside a leaf have both ends in the leaf, so one end is dropped
    // unless the leaf is the single vertex y_i.
    if (is_y[u] && is_y[v]) throw PreconditionError("two leaves joined by a bridge");
    out.in_star[e] = true;
    out.merged.add_edge(map[u], map[v]);
    out.merged_origin.push_back(e);
  }
  return out;
}

Labeling verified(const Multigraph& g, Labeling l, const char* what) {
  if (!check_zero_sum(g, l)) {
    throw Error(std::string("internal error: ") + what + " produced an invalid labeling");
  }
  return l;
}

}  // namespace zsmagic::detail
