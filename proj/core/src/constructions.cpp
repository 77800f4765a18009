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


#include "zsmagic/constructions.hpp"

#include <algorithm>
#include <string>

#include "gadgets.hpp"
#include "zsmagic/errors.hpp"
#include "zsmagic/factors.hpp"
#include "zsmagic/families.hpp"
#include "zsmagic/spectra.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic {

using detail::verified;

namespace {

using Columns = std::vector<std::vector<Residue>>;

Columns zero_columns(std::size_t arity, int edges) {
  return Columns(arity, std::vector<Residue>(static_cast<std::size_t>(edges), 0));
}

void require_no_bridge_obstruction(const Multigraph& g) {
  if (!is_connected(g)) throw PreconditionError("the graph must be connected");
  if (auto ob = bridge_deletion_obstruction(g)) {
    throw ObstructionError("deleting bridge " + std::to_string(ob->bridge) + " leaves a " +
                           to_string(ob->kind) +
                           " component; no finite non-trivial abelian group works");
  }
}

// Labels the odd-cycle gadget hanging off one end of a bridge in `col`
// (modulus 2j). `incoming` is the label already on the edge entering `start`.
void label_gadget(const Multigraph& g, const detail::OddCycleRoute& route, Residue incoming,
                  Residue modulus, std::vector<Residue>& col) {
  Residue last = incoming;
  for (EdgeId e : route.path) {
    last = mod(-last, modulus);
    col[e] = last;
  }
  // Cycle labels alternate a, -a, ..., a; at the attachment vertex the
  // incoming label plus 2a must vanish.
  const Residue a = mod(-last, modulus) / 2;
  for (std::size_t i = 0; i < route.cycle.size(); ++i) {
    col[route.cycle[i]] = i % 2 == 0 ? a : mod(-a, modulus);
  }
  (void)g;
}

}  // namespace

Labeling construct_rrr(const Multigraph& g, int j) {
  if (j < 2) throw PreconditionError("construct_rrr needs j >= 2");
  require_no_bridge_obstruction(g);
  const Decomposition d = decompose(g);
  if (d.bridges.empty()) throw PreconditionError("construct_rrr needs at least one bridge");
  const Residue n = 2 * static_cast<Residue>(j);
  const std::size_t m = d.bridges.size();
  Columns cols = zero_columns(m + 3, g.size());

  const Residue beta = j % 2 == 0 ? j : j - 1;
  for (std::size_t r = 0; r < m; ++r) {
    const EdgeId b = d.bridges[r];
    std::vector<bool> removed(static_cast<std::size_t>(g.size()), false);
    removed[b] = true;
    const auto side = component_labels(remove_edges(g, removed).graph);
    cols[r][b] = beta;
    for (VertexId end : {g.endpoints(b).u, g.endpoints(b).v}) {
      std::vector<bool> allowed(static_cast<std::size_t>(g.size()), false);
      for (EdgeId e = 0; e < g.size(); ++e) {
        allowed[e] = e != b && side[g.endpoints(e).u] == side[end];
      }
      const auto route = detail::odd_cycle_route(g, end, allowed);
      if (!route) throw ObstructionError("no odd cycle beside bridge " + std::to_string(b));
      label_gadget(g, *route, beta, n, cols[r]);
    }
  }
  const Columns base = detail::component_z2_cubed(g, d, {});
  for (int i = 0; i < 3; ++i) {
    for (EdgeId e = 0; e < g.size(); ++e) cols[m + i][e] = base[i][e] * j;
  }
  return verified(g, labeling_from_columns(GroupSpec::cyclic_power(n, static_cast<int>(m + 3)), cols),
                  "construct_rrr");
}

Labeling construct_sss(const Multigraph& g, int j) {
  if (j < 2 || j % 2 != 0) throw PreconditionError("construct_sss needs an even j >= 2");
  require_no_bridge_obstruction(g);
  const Decomposition d = decompose(g);
  if (d.bridges.empty()) throw PreconditionError("construct_sss needs at least one bridge");
  const Residue n = 2 * static_cast<Residue>(j);
  if (d.bridges.size() <= 3) return pad_with_zeros(construct_rrr(g, j), n, 6);

  const detail::LeafContraction lc = detail::contract_leaves(g, d);
  const Labeling merged = z2_cubed_labeling(lc.merged);
  Columns cols = zero_columns(6, g.size());
  for (EdgeId e = 0; e < lc.merged.size(); ++e) {
    for (int i = 0; i < 3; ++i) cols[i][lc.merged_origin[e]] = merged[e].residues[i] * j;
  }
  for (std::size_t i = 0; i < lc.leaves.size(); ++i) {
    const int c = lc.leaves[i];
    const EdgeId b = lc.leaf_bridge[i];
    std::vector<bool> allowed(static_cast<std::size_t>(g.size()), false);
    for (EdgeId e : d.components[c].edges) allowed[e] = true;
    const auto route = detail::odd_cycle_route(g, lc.y[i], allowed);
    if (!route) throw ObstructionError("leaf component without an odd cycle");
    for (int k = 0; k < 3; ++k) {
      const Residue p = cols[k][b];
      for (EdgeId e : route->path) cols[k][e] = p;
      // Where the bridge coordinate is j the cycle alternates j/2, 3j/2.
      for (std::size_t t = 0; t < route->cycle.size(); ++t) {
        cols[k][route->cycle[t]] = p == 0 ? 0 : (t % 2 == 0 ? j / 2 : 3 * j / 2);
      }
    }
    const Subgraph h = component_subgraph(g, d, c);
    const Labeling hl = z2_cubed_labeling(h.graph);
    for (EdgeId e = 0; e < h.graph.size(); ++e) {
      for (int k = 0; k < 3; ++k) cols[3 + k][h.parent_edge[e]] = hl[e].residues[k] * j;
    }
  }
  return verified(g, labeling_from_columns(GroupSpec::cyclic_power(n, 6), cols), "construct_sss");
}

Labeling one_factor_z4_labeling(const Multigraph& g) {
  if (!is_cubic(g)) throw PreconditionError("one_factor_z4_labeling requires a cubic graph");
  const auto m = perfect_matching(g);
  if (!m) throw ObstructionError("the graph has no 1-factor, so it is not zero-sum Z4-magic");
  Columns cols = zero_columns(1, g.size());
  for (EdgeId e = 0; e < g.size(); ++e) cols[0][e] = 1;
  for (EdgeId e : m->edges) cols[0][e] = 2;
  return verified(g, labeling_from_columns(GroupSpec::cyclic_power(4, 1), cols), "one_factor_z4_labeling");
}

Labeling construct_ppd(const Multigraph& g) {
  if (!is_cubic(g) || !is_connected(g)) throw PreconditionError("construct_ppd requires a connected cubic graph");
  const Decomposition d = decompose(g);
  if (d.bridges.size() <= 2) return pad_with_zeros(one_factor_z4_labeling(g), 4, 3);

  const detail::LeafContraction lc = detail::contract_leaves(g, d);
  const Labeling merged = z2_cubed_labeling(lc.merged);
  Columns cols = zero_columns(3, g.size());
  for (EdgeId e = 0; e < lc.merged.size(); ++e) {
    for (int i = 0; i < 3; ++i) cols[i][lc.merged_origin[e]] = merged[e].residues[i] * 2;
  }
  for (std::size_t i = 0; i < lc.leaves.size(); ++i) {
    const int c = lc.leaves[i];
    const EdgeId b = lc.leaf_bridge[i];
    const Subgraph h = component_subgraph(g, d, c);
    const Smoothing s = smooth_all(h.graph);
    VertexId local_y = -1;
    for (VertexId v = 0; v < h.graph.order(); ++v) {
      if (h.parent_vertex[v] == lc.y[i]) local_y = v;
    }
    const EdgeId through_y = s.edge_of[h.graph.incident_edges(local_y).front()];
    const auto factor = two_factor_containing(s.graph, {through_y});
    if (!factor) throw Error("internal error: no 2-factor through the smoothed leaf edge");
    std::vector<bool> in_factor(static_cast<std::size_t>(s.graph.size()), false);
    for (EdgeId e : factor->edges) in_factor[e] = true;
    for (EdgeId e = 0; e < h.graph.size(); ++e) {
      const bool half = in_factor[s.edge_of[e]];
      for (int k = 0; k < 3; ++k) {
        const Residue p = cols[k][b];
        cols[k][h.parent_edge[e]] = half ? p / 2 : p;
      }
    }
  }
  return verified(g, labeling_from_columns(GroupSpec::cyclic_power(4, 3), cols), "construct_ppd");
}

Labeling construct_ppp(const Multigraph& g) {
  if (!is_cubic(g)) throw PreconditionError("construct_ppp requires a cubic graph");
  if (perfect_matching(g)) return one_factor_z4_labeling(g);
  // Without a 1-factor every component of the graph is handled on its own;
  // components that have a 1-factor still get the Z_4 labeling, padded.
  const auto comps = components(g);
  Columns cols = zero_columns(2, g.size());
  for (const auto& vertices : comps) {
    const Subgraph h = induced_subgraph(g, vertices);
    const Labeling l = perfect_matching(h.graph) ? pad_with_zeros(one_factor_z4_labeling(h.graph), 4, 2)
                                                 : construct_ppp_bridged(h.graph);
    for (EdgeId e = 0; e < h.graph.size(); ++e) {
      for (int k = 0; k < 2; ++k) cols[k][h.parent_edge[e]] = l[e].residues[k];
    }
  }
  return verified(g, labeling_from_columns(GroupSpec::cyclic_power(4, 2), cols), "construct_ppp");
}

Labeling construct_zzz(const Multigraph& g) {
  if (!is_cubic(g) || !is_connected(g)) throw PreconditionError("construct_zzz requires a connected cubic graph");
  const Decomposition d = decompose(g);
  Columns cols = zero_columns(4, g.size());
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const BridgeComponent& comp = d.components[c];
    const int twos = static_cast<int>(comp.bridges.size());
    if (comp.type == ComponentType::kTrivial) {
      throw ObstructionError("component " + std::to_string(c) + " is trivial");
    }
    if (twos != 1 && twos % 2 != 0) {
      throw ObstructionError("component " + std::to_string(c) + " has an odd number (" +
                             std::to_string(twos) + ") of degree-2 vertices");
    }
  }
  const Columns base = detail::component_z2_cubed(g, d, {});
  for (int i = 0; i < 3; ++i) cols[i] = base[i];
  for (EdgeId b : d.bridges) cols[3][b] = 2;
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const BridgeComponent& comp = d.components[c];
    if (comp.bridges.size() == 1) {
      const EdgeId b = comp.bridges.front();
      const VertexId y = d.component_of[g.endpoints(b).u] == c ? g.endpoints(b).u : g.endpoints(b).v;
      std::vector<bool> allowed(static_cast<std::size_t>(g.size()), false);
      for (EdgeId e : comp.edges) allowed[e] = true;
      const auto route = detail::odd_cycle_route(g, y, allowed);
      if (!route) throw ObstructionError("component " + std::to_string(c) + " has no odd cycle");
      for (EdgeId e : route->path) cols[3][e] = 2;
      // The edge entering the cycle carries 2, so the cycle alternates 1, 3.
      const Residue a = 1;
      for (std::size_t t = 0; t < route->cycle.size(); ++t) cols[3][route->cycle[t]] = t % 2 == 0 ? a : 4 - a;
    } else if (!comp.bridges.empty()) {
      const Subgraph h = component_subgraph(g, d, c);
      const Threading t = threading(h.graph);
      for (const auto& path : t.paths) {
        for (EdgeId e : path) cols[3][h.parent_edge[e]] = 2;
      }
    }
  }
  return verified(g, labeling_from_columns(GroupSpec({2, 2, 2, 4}), cols), "construct_zzz");
}

Labeling construct_fff(const Multigraph& base) {
  const MartiniFamilyMember member = m2_detailed(base);
  const auto colouring = three_edge_coloring(base);
  if (!colouring) throw ObstructionError("the base graph has chromatic index 4");
  const Multigraph& g = member.graph;
  Columns cols = zero_columns(2, g.size());
  auto set = [&](EdgeId e, Residue x, Residue y) {
    cols[0][e] = x;
    cols[1][e] = y;
  };
  const std::vector<int> colour = colouring->colour_of(base.size());
  for (EdgeId e = 0; e < base.size(); ++e) {
    const auto& path = member.subdivision.path[e];
    for (std::size_t i = 0; i < path.size(); ++i) {
      switch (colour[e]) {
        case 0:
          set(path[i], 1, 1);
          break;
        case 1:
          set(path[i], 0, 1);
          break;
        default:
          set(path[i], 1, i == 1 ? 0 : 2);
          break;
      }
    }
  }
  for (const MartiniCopy& copy : member.copies) {
    set(copy.edges[0], 0, 2);
    set(copy.edges[1], 1, 1);
    set(copy.edges[2], 1, 1);
    set(copy.edges[3], 1, 1);
    set(copy.edges[4], 0, 2);
  }
  return verified(g, labeling_from_columns(GroupSpec({2, 4}), cols), "construct_fff");
}

Labeling lift_lemma(const Multigraph& g, const Labeling& l) {
  const auto& moduli = l.group.moduli();
  const bool shape = moduli.size() >= 2 && moduli.back() == 4 &&
                     std::all_of(moduli.begin(), moduli.end() - 1, [](Residue n) { return n == 2; });
  if (!shape) throw PreconditionError("lift_lemma expects a labeling over Z2^k x Z4");
  if (!is_cubic(g) || !is_connected(g)) throw PreconditionError("lift_lemma requires a connected cubic graph");
  if (!check_zero_sum(g, l)) throw PreconditionError("lift_lemma needs a valid zero-sum labeling");
  if (moduli.size() - 1 <= 3) return l;

  const Decomposition d = decompose(g);
  Columns cols = detail::component_z2_cubed(g, d, {});
  std::vector<Residue> last(static_cast<std::size_t>(g.size()));
  for (EdgeId e = 0; e < g.size(); ++e) last[e] = l[e].residues.back();
  cols.push_back(std::move(last));
  return verified(g, labeling_from_columns(GroupSpec({2, 2, 2, 4}), cols), "lift_lemma");
}

Z2kResult construct_z2k(const Multigraph& g, const SolveOptions& options) {
  if (!is_two_edge_connected(g)) throw PreconditionError("construct_z2k requires a 2-edge-connected graph");
  for (int k = 1; k <= 3; ++k) {
    const SolveResult r = solve(g, GroupSpec::cyclic_power(2, k), options);
    if (r.status == SolveStatus::kSat) return {k, verified(g, *r.witness, "construct_z2k")};
    if (r.status == SolveStatus::kUnknown) {
      throw BudgetExhausted("could not decide Z2^" + std::to_string(k) + " within the budget");
    }
  }
  throw Error("internal error: a 2-edge-connected graph must be zero-sum Z2^3-magic");
}

Labeling z2_cubed_labeling(const Multigraph& g, const SolveOptions& options) {
  const GroupSpec z2_3 = GroupSpec::cyclic_power(2, 3);
  if (g.size() == 0) return Labeling{z2_3, {}};
  bool even = true;
  for (VertexId v = 0; v < g.order(); ++v) even = even && g.degree(v) % 2 == 0;
  Columns cols = zero_columns(3, g.size());
  if (even) {
    for (EdgeId e = 0; e < g.size(); ++e) cols[0][e] = 1;
    return verified(g, labeling_from_columns(z2_3, cols), "z2_cubed_labeling");
  }
  if (is_cubic(g)) {
    if (const auto c = three_edge_coloring(g, {options.budget, std::nullopt})) {
      // Colours 0, 1, 2 become (1,0), (0,1), (1,1).
      const std::vector<int> colour = c->colour_of(g.size());
      for (EdgeId e = 0; e < g.size(); ++e) {
        cols[0][e] = colour[e] != 1 ? 1 : 0;
        cols[1][e] = colour[e] != 0 ? 1 : 0;
      }
      return verified(g, labeling_from_columns(z2_3, cols), "z2_cubed_labeling");
    }
  }
  const SolveResult r = solve(g, z2_3, options);
  if (r.status == SolveStatus::kSat) return *r.witness;
  if (r.status == SolveStatus::kUnsat) throw ObstructionError("no zero-sum Z2^3 labeling: " + r.reason);
  throw BudgetExhausted("no zero-sum Z2^3 labeling found within the budget");
}

}  // namespace zsmagic
