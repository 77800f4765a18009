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


#include "zsmagic/spectra.hpp"

#include <algorithm>
#include <string>

#include "zsmagic/constructions.hpp"
#include "zsmagic/errors.hpp"
#include "zsmagic/factors.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic {

const char* to_string(ObstructionKind k) {
  return k == ObstructionKind::kTrivial ? "trivial" : "bipartite";
}

std::optional<BridgeObstruction> bridge_deletion_obstruction(const Multigraph& g) {
  if (!is_connected(g)) throw PreconditionError("bridge_deletion_obstruction requires a connected graph");
  for (EdgeId b : find_bridges(g)) {
    std::vector<bool> removed(static_cast<std::size_t>(g.size()), false);
    removed[b] = true;
    const Subgraph rest = remove_edges(g, removed);
    const auto label = component_labels(rest.graph);
    for (VertexId end : {g.endpoints(b).u, g.endpoints(b).v}) {
      std::vector<VertexId> side;
      for (VertexId v = 0; v < g.order(); ++v) {
        if (label[v] == label[end]) side.push_back(v);
      }
      if (side.size() == 1) return BridgeObstruction{b, ObstructionKind::kTrivial, side};
      if (is_bipartite(induced_subgraph(rest.graph, side).graph)) {
        return BridgeObstruction{b, ObstructionKind::kBipartite, side};
      }
    }
  }
  return std::nullopt;
}

namespace {

void require_connected_cubic(const Multigraph& g, const char* what) {
  if (!is_cubic(g) || !is_connected(g)) {
    throw PreconditionError(std::string(what) + " requires a connected cubic graph");
  }
}

}  // namespace

std::optional<int> www_obstruction(const Multigraph& g) {
  require_connected_cubic(g, "www_obstruction");
  const Decomposition d = decompose(g);
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    const BridgeComponent& comp = d.components[c];
    if (comp.type == ComponentType::kTrivial) return c;
    // In a cubic graph the degree-2 vertices of a component are exactly its
    // bridge ends.
    if (comp.bridges.size() % 2 == 1 && is_bipartite(component_subgraph(g, d, c).graph)) return c;
  }
  return std::nullopt;
}

std::optional<int> tttx_obstruction(const Multigraph& g) {
  require_connected_cubic(g, "tttx_obstruction");
  const Decomposition d = decompose(g);
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    if (d.components[c].type != ComponentType::kGeneral) continue;
    const Subgraph h = component_subgraph(g, d, c);
    if (h.graph.max_degree() != 3) continue;
    bool adjacent_cubic = false;
    for (const Endpoints& e : h.graph.edges()) {
      if (h.graph.degree(e.u) == 3 && h.graph.degree(e.v) == 3) adjacent_cubic = true;
    }
    if (adjacent_cubic) continue;
    if (!three_edge_coloring(smooth_all(h.graph).graph)) return c;
  }
  return std::nullopt;
}

bool zzz_condition(const Multigraph& g) {
  const Decomposition d = decompose(g);
  return std::all_of(d.components.begin(), d.components.end(), [](const BridgeComponent& c) {
    return c.type != ComponentType::kTrivial && (c.bridges.size() == 1 || c.bridges.size() % 2 == 0);
  });
}

std::string to_string(Zim z) { return z == Zim::kAllButTwo ? "N\\{2}" : "N\\{2,4}"; }

Zim zim_cubic(const Multigraph& g) {
  if (!is_cubic(g)) throw PreconditionError("zim_cubic requires a cubic graph");
  return perfect_matching(g) ? Zim::kAllButTwo : Zim::kAllButTwoAndFour;
}

std::string ZetaValue::to_string() const {
  switch (kind) {
    case Kind::kExact:
      return std::to_string(hi);
    case Kind::kInfinite:
      return "infinite";
    case Kind::kInterval:
      break;
  }
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

namespace {

Labeling scaled(const Labeling& l, Residue factor, Residue modulus) {
  std::vector<std::vector<Residue>> cols = columns_of(l);
  for (auto& col : cols) {
    for (Residue& r : col) r = mod(r * factor, modulus);
  }
  return labeling_from_columns(GroupSpec::cyclic_power(modulus, static_cast<int>(cols.size())), cols);
}

Labeling constant_labeling(const Multigraph& g, Residue modulus, Residue value) {
  return labeling_from_columns(GroupSpec::cyclic_power(modulus, 1),
                               {std::vector<Residue>(static_cast<std::size_t>(g.size()), value)});
}

// Upper bound with a witness (when one could be built) and a lower bound.
void bound_cubic(const Multigraph& g, int j, ZetaValue& z, const SpectraOptions& options) {
  const Residue n = 2 * static_cast<Residue>(j);
  const std::optional<Matching> matching = perfect_matching(g);
  const bool one_factor = matching.has_value();
  if (j == 1) {
    // Every vertex has odd degree, so Z_2 is out; Z_2^2 needs three colours.
    z.lo = 2;
    if (const auto c = three_edge_coloring(g, {options.budget, std::nullopt})) {
      z.hi = 2;
      std::vector<std::vector<Residue>> cols(2, std::vector<Residue>(static_cast<std::size_t>(g.size())));
      const auto colour = c->colour_of(g.size());
      for (EdgeId e = 0; e < g.size(); ++e) {
        cols[0][e] = colour[e] != 1 ? 1 : 0;
        cols[1][e] = colour[e] != 0 ? 1 : 0;
      }
      z.witness = labeling_from_columns(GroupSpec::cyclic_power(2, 2), cols);
      z.basis = "3-edge-colouring";
    } else {
      z.lo = z.hi = 3;
      z.witness = z2_cubed_labeling(g);
      z.basis = "chromatic index 4; Z2^3 labeling";
    }
    return;
  }
  if (j == 2) {
    if (one_factor) {
      z.hi = 1;
      z.witness = one_factor_z4_labeling(g);
      z.basis = "1-factor labeling";
    } else {
      z.lo = z.hi = 2;
      z.witness = construct_ppp(g);
      z.basis = "no 1-factor excludes Z4; bridge-tree Z4^2 construction";
    }
    return;
  }
  z.hi = 1;
  if (n % 3 == 0) {
    z.witness = constant_labeling(g, n, n / 3);
    z.basis = "constant labeling 2j/3";
  } else if (one_factor) {
    Labeling l = constant_labeling(g, n, 1);
    for (EdgeId e : matching->edges) l.labels[e] = GroupElem{{n - 2}};
    z.witness = std::move(l);
    z.basis = "1-factor labeling";
  } else {
    SolveOptions so;
    so.budget = options.budget;
    const SolveResult r = solve(g, GroupSpec::cyclic_power(n, 1), so);
    z.probes.push_back({1, r.status, r.nodes});
    if (r.witness) z.witness = r.witness;
    z.basis = "every cubic graph is zero-sum Z_m-magic for m >= 6";
  }
}

void bound_general(const Multigraph& g, int j, const std::vector<EdgeId>& bridges, ZetaValue& z) {
  const Residue n = 2 * static_cast<Residue>(j);
  if (bridges.empty()) {
    z.hi = 3;
    z.witness = scaled(z2_cubed_labeling(g), j, n);
    z.basis = "Z2^3 labeling scaled by j";
    return;
  }
  const int b = static_cast<int>(bridges.size());
  if (j % 2 == 0 && b > 3) {
    z.hi = 6;
    z.witness = construct_sss(g, j);
    z.basis = "leaf-contraction construction (6 coordinates)";
  } else {
    z.hi = 3 + b;
    z.witness = construct_rrr(g, j);
    z.basis = "per-bridge odd-cycle gadgets (3 + |B| coordinates)";
  }
}

}  // namespace

ZetaValue zeta(const Multigraph& g, int j, int k_max, const SpectraOptions& options) {
  if (j < 1) throw PreconditionError("zeta needs j >= 1");
  if (!is_connected(g)) throw PreconditionError("zeta requires a connected graph");
  ZetaValue z;
  const Residue n = 2 * static_cast<Residue>(j);
  if (g.size() == 0) {
    z.kind = ZetaValue::Kind::kExact;
    z.witness = Labeling{GroupSpec::cyclic_power(n, 1), {}};
    z.basis = "no edges";
    return z;
  }
  if (auto ob = bridge_deletion_obstruction(g)) {
    z.kind = ZetaValue::Kind::kInfinite;
    z.basis = "deleting bridge " + std::to_string(ob->bridge) + " leaves a " + to_string(ob->kind) + " component";
    return z;
  }
  const std::vector<EdgeId> bridges = find_bridges(g);
  if (j == 1 && !bridges.empty()) {
    z.kind = ZetaValue::Kind::kInfinite;
    z.basis = "a bridge is zero in every zero-sum Z2^k labeling";
    return z;
  }
  if (is_cubic(g)) {
    bound_cubic(g, j, z, options);
  } else {
    if (j == 1) {
      bool odd = false;
      for (VertexId v = 0; v < g.order(); ++v) odd = odd || g.degree(v) % 2 == 1;
      if (odd) z.lo = 2;
    }
    bound_general(g, j, bridges, z);
  }
  if (z.witness && !check_zero_sum(g, *z.witness)) throw Error("internal error: zeta witness failed the check");

  SolveOptions so;
  so.budget = options.budget;
  for (int k = z.lo; k < z.hi && k <= k_max; ++k) {
    const SolveResult r = solve(g, GroupSpec::cyclic_power(n, k), so);
    z.probes.push_back({k, r.status, r.nodes});
    if (r.status == SolveStatus::kSat) {
      z.hi = k;
      z.witness = r.witness;
      z.basis = "solver";
      break;
    }
    if (r.status == SolveStatus::kUnknown) break;
    z.lo = k + 1;
  }
  z.kind = z.lo == z.hi && z.witness ? ZetaValue::Kind::kExact : ZetaValue::Kind::kInterval;
  return z;
}

const char* to_string(Magic m) {
  switch (m) {
    case Magic::kMagic:
      return "magic";
    case Magic::kNotMagic:
      return "not-magic";
    case Magic::kUnknown:
      break;
  }
  return "unknown";
}

Classification classify_cubic(const Multigraph& g, const SpectraOptions& options) {
  require_connected_cubic(g, "classify_cubic");
  Classification out;
  out.has_one_factor = perfect_matching(g).has_value();
  out.bridgeless = find_bridges(g).empty();
  if (out.bridgeless) out.chromatic_index = chromatic_index_cubic(g);

  for (int k = 1; k <= 3; ++k) {
    out.families.push_back({GroupSpec(std::vector<Residue>(static_cast<std::size_t>(k), 2)).to_string() + "xZ4",
                            Magic::kUnknown, ""});
  }
  if (out.has_one_factor) {
    if (out.chromatic_index == 3) {
      out.category = 'a';
      out.summary = "zero-sum magic for every finite non-trivial abelian group except Z2";
    } else if (out.bridgeless) {
      out.category = 'b';
      out.summary = "zero-sum magic for every finite non-trivial abelian group except Z2 and Z2^2";
    } else {
      out.category = 'c';
      out.summary = "zero-sum magic for every finite non-trivial abelian group except Z2^k, k >= 1";
    }
    for (auto& f : out.families) {
      f.status = Magic::kMagic;
      f.basis = "contains Z4 and the graph has a 1-factor";
    }
    return out;
  }

  out.category = 'd';
  out.summary = "not zero-sum magic for Z4 and Z2^k (k >= 1); Z2^k x Z4 as listed; magic for every other group";
  auto& fam = out.families;
  if (auto c = www_obstruction(g)) {
    for (auto& f : fam) {
      f.status = Magic::kNotMagic;
      f.basis = "component " + std::to_string(*c) + " is trivial or bipartite with an odd number of degree-2 vertices";
    }
    return out;
  }
  if (zzz_condition(g)) {
    construct_zzz(g);
    fam[2] = {fam[2].group, Magic::kMagic, "construction over Z2^3xZ4"};
  }
  if (auto c = tttx_obstruction(g)) {
    fam[0] = {fam[0].group, Magic::kNotMagic,
              "component " + std::to_string(*c) + " smooths to a graph of chromatic index 4"};
  }
  SolveOptions so;
  so.budget = options.budget;
  for (int k = 1; k <= 3; ++k) {
    FamilyStatus& f = fam[k - 1];
    if (f.status != Magic::kUnknown) continue;
    // Magic at a smaller k carries over to larger k.
    if (k > 1 && fam[k - 2].status == Magic::kMagic) {
      f = {f.group, Magic::kMagic, "follows from Z2^" + std::to_string(k - 1) + "xZ4"};
      continue;
    }
    const SolveResult r = solve(g, GroupSpec::parse(f.group), so);
    if (r.status == SolveStatus::kSat) {
      f = {f.group, Magic::kMagic, "solver witness"};
    } else if (r.status == SolveStatus::kUnsat) {
      f = {f.group, Magic::kNotMagic, "solver: " + r.reason};
    } else {
      f.basis = "solver budget of " + std::to_string(options.budget) + " nodes exhausted";
    }
  }
  // Not magic at k rules out every smaller k.
  for (int k = 3; k >= 2; --k) {
    if (fam[k - 1].status == Magic::kNotMagic && fam[k - 2].status != Magic::kNotMagic) {
      fam[k - 2] = {fam[k - 2].group, Magic::kNotMagic, "follows from " + fam[k - 1].group};
    }
  }
  return out;
}

}  // namespace zsmagic
