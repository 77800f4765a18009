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


// Z_4^2 labeling of a bridged cubic graph, built one component of G - B(G)
// at a time along the bridge tree. Every bridge label is one of
// (2,0), (0,2), (2,2).

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "gadgets.hpp"
#include "zsmagic/constructions.hpp"
#include "zsmagic/errors.hpp"
#include "zsmagic/factors.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic {

namespace {

using Pair = std::array<Residue, 2>;

constexpr Pair kA{2, 0};
constexpr Pair kB{0, 2};
constexpr Pair kC{2, 2};
constexpr std::array<Pair, 3> kBridgeLabels{kA, kB, kC};

Pair negate_pair(Pair p) { return {mod(-p[0], 4), mod(-p[1], 4)}; }

Pair add_pair(Pair a, Pair b) { return {mod(a[0] + b[0], 4), mod(a[1] + b[1], 4)}; }

class BridgeTreeBuilder {
 public:
  explicit BridgeTreeBuilder(const Multigraph& g)
      : g_(g), d_(decompose(g)), label_(static_cast<std::size_t>(g.size())),
        done_(static_cast<std::size_t>(g.size()), false) {}

  Labeling run() {
    if (d_.bridges.empty()) throw PreconditionError("construct_ppp_bridged needs at least one bridge");
    int root = -1;
    for (int c = 0; c < static_cast<int>(d_.components.size()) && root == -1; ++c) {
      if (d_.is_leaf(c)) root = c;
    }
    const EdgeId b0 = d_.components[root].bridges.front();
    set(b0, kA);
    std::set<std::pair<int, EdgeId>> pending{{root, b0}};
    std::vector<bool> processed(d_.components.size(), false);
    while (!pending.empty()) {
      const auto [c, in] = *pending.begin();
      pending.erase(pending.begin());
      if (processed[c]) continue;
      processed[c] = true;
      process(c, in);
      for (EdgeId b : d_.components[c].bridges) {
        const auto [u, v] = g_.endpoints(b);
        const int other = d_.component_of[u] == c ? d_.component_of[v] : d_.component_of[u];
        if (!processed[other]) pending.emplace(other, b);
      }
    }
    std::vector<std::vector<Residue>> cols(2, std::vector<Residue>(static_cast<std::size_t>(g_.size())));
    for (EdgeId e = 0; e < g_.size(); ++e) {
      if (!done_[e]) throw Error("internal error: edge " + std::to_string(e) + " left unlabeled");
      cols[0][e] = label_[e][0];
      cols[1][e] = label_[e][1];
    }
    return detail::verified(g_, labeling_from_columns(GroupSpec::cyclic_power(4, 2), cols),
                            "construct_ppp_bridged");
  }

 private:
  void set(EdgeId e, Pair p) {
    label_[e] = p;
    done_[e] = true;
  }

  // The bridge at vertex v (every vertex meets at most one bridge here).
  EdgeId bridge_at(VertexId v) const {
    for (EdgeId e : g_.incident_edges(v)) {
      if (d_.is_bridge[e]) return e;
    }
    return -1;
  }

  // Labels the bridge at v so that v's weight vanishes, or checks the
  // incoming bridge.
  void close_vertex(VertexId v) {
    const EdgeId b = bridge_at(v);
    Pair rest{0, 0};
    for (EdgeId e : g_.incident_edges(v)) {
      if (e != b) rest = add_pair(rest, label_[e]);
    }
    const Pair want = negate_pair(rest);
    if (done_[b]) {
      if (label_[b] != want) throw Error("internal error: bridge label mismatch");
      return;
    }
    if (std::find(kBridgeLabels.begin(), kBridgeLabels.end(), want) == kBridgeLabels.end()) {
      throw Error("internal error: bridge label outside {(2,0),(0,2),(2,2)}");
    }
    set(b, want);
  }

  void process(int c, EdgeId in) {
    const BridgeComponent& comp = d_.components[c];
    const Pair incoming = label_[in];
    switch (comp.type) {
      case ComponentType::kTrivial: {
        int next = 0;
        for (EdgeId b : comp.bridges) {
          if (b == in) continue;
          while (kBridgeLabels[next] == incoming) ++next;
          set(b, kBridgeLabels[next++]);
        }
        return;
      }
      case ComponentType::kCycle:
        process_cycle(comp, in, incoming);
        return;
      case ComponentType::kGeneral:
        process_general(c, in, incoming);
        return;
    }
  }

  void process_cycle(const BridgeComponent& comp, EdgeId in, Pair incoming) {
    const auto [iu, iv] = g_.endpoints(in);
    const VertexId start = std::binary_search(comp.vertices.begin(), comp.vertices.end(), iu) ? iu : iv;
    std::vector<bool> in_cycle(static_cast<std::size_t>(g_.size()), false);
    for (EdgeId e : comp.edges) in_cycle[e] = true;
    // Walk the cycle from the vertex of the incoming bridge.
    std::vector<EdgeId> order;
    std::vector<VertexId> visit{start};
    EdgeId prev = -1;
    VertexId at = start;
    do {
      EdgeId next = -1;
      for (EdgeId e : g_.incident_edges(at)) {
        if (in_cycle[e] && e != prev) {
          next = e;
          break;
        }
      }
      order.push_back(next);
      prev = next;
      at = g_.endpoints(next).other(at);
      visit.push_back(at);
    } while (at != start);
    const std::size_t m = order.size();

    std::vector<Pair> others;
    for (Pair p : kBridgeLabels) {
      if (p != incoming) others.push_back(p);
    }
    std::vector<Pair> lab(m);
    lab[0] = others[0];
    lab[m - 1] = others[1];
    for (std::size_t i = 1; i + 1 < m; ++i) {
      for (Pair p : kBridgeLabels) {
        if (p == lab[i - 1] || (i + 2 == m && p == lab[m - 1])) continue;
        lab[i] = p;
        break;
      }
    }
    for (std::size_t i = 0; i < m; ++i) set(order[i], lab[i]);
    for (std::size_t i = 1; i < m; ++i) close_vertex(visit[i]);
    close_vertex(start);
  }

  void process_general(int c, EdgeId in, Pair incoming) {
    const Subgraph h = component_subgraph(g_, d_, c);
    const Smoothing s = smooth_all(h.graph);
    std::vector<VertexId> twos;  // local degree-2 vertices, the incoming one first
    VertexId first = -1;
    for (VertexId v = 0; v < h.graph.order(); ++v) {
      if (h.graph.degree(v) != 2) continue;
      if (bridge_at(h.parent_vertex[v]) == in) {
        first = v;
      } else {
        twos.push_back(v);
      }
    }
    twos.insert(twos.begin(), first);
    const std::size_t k = twos.size();
    auto s_edge = [&](VertexId v) { return s.edge_of[h.graph.incident_edges(v).front()]; };

    // f: Z_4 labeling of s(H); one-factor style (2 on M, 1 off) or
    // two-factor style (1 on M, 2 off).
    std::vector<Residue> f(static_cast<std::size_t>(s.graph.size()));
    auto use_one_factor = [&](EdgeId must) {
      const auto m = one_factor_containing(s.graph, must);
      if (!m) throw Error("internal error: no 1-factor through a smoothed edge");
      std::fill(f.begin(), f.end(), 1);
      for (EdgeId e : m->edges) f[e] = 2;
    };
    auto use_two_factor = [&](std::vector<EdgeId> must) {
      std::sort(must.begin(), must.end());
      must.erase(std::unique(must.begin(), must.end()), must.end());
      const auto m = two_factor_containing(s.graph, must);
      if (!m) throw Error("internal error: no 2-factor through the smoothed edges");
      std::fill(f.begin(), f.end(), 2);
      for (EdgeId e : m->edges) f[e] = 1;
    };
    // g: 2 along a threading of H, or of H with one degree-2 vertex smoothed.
    std::vector<Residue> gl(static_cast<std::size_t>(h.graph.size()), 0);
    auto thread_all = [&] {
      for (const auto& path : threading(h.graph).paths) {
        for (EdgeId e : path) gl[e] = 2;
      }
    };
    auto thread_without = [&](VertexId p) {
      const Smoothing sp = smooth_vertices(h.graph, {p});
      std::vector<bool> on(static_cast<std::size_t>(sp.graph.size()), false);
      for (const auto& path : threading(sp.graph).paths) {
        for (EdgeId e : path) on[e] = true;
      }
      for (EdgeId e = 0; e < h.graph.size(); ++e) gl[e] = on[sp.edge_of[e]] ? 2 : 0;
    };

    // Which coordinate carries f; the other carries g (or f again, or 0).
    enum class Layout { kFG, kGF, kF0, k0F, kFF };
    Layout layout = Layout::kFG;
    if (k == 1) {
      use_two_factor({s_edge(twos[0])});
      layout = incoming == kA ? Layout::kF0 : incoming == kB ? Layout::k0F : Layout::kFF;
    } else if (k % 2 == 0) {
      if (incoming == kC) {
        use_two_factor({s_edge(twos[0])});
        layout = Layout::kFG;
      } else {
        use_one_factor(s_edge(twos[0]));
        layout = incoming == kA ? Layout::kGF : Layout::kFG;
      }
      thread_all();
    } else if (incoming == kC) {
      use_two_factor({s_edge(twos[0]), s_edge(twos[1])});
      thread_without(twos[1]);
      layout = Layout::kFG;
    } else {
      use_two_factor({s_edge(twos[0])});
      thread_without(twos[0]);
      layout = incoming == kA ? Layout::kFG : Layout::kGF;
    }

    for (EdgeId e = 0; e < h.graph.size(); ++e) {
      const Residue fv = f[s.edge_of[e]];
      const Residue gv = gl[e];
      Pair p{};
      switch (layout) {
        case Layout::kFG:
          p = {fv, gv};
          break;
        case Layout::kGF:
          p = {gv, fv};
          break;
        case Layout::kF0:
          p = {fv, 0};
          break;
        case Layout::k0F:
          p = {0, fv};
          break;
        case Layout::kFF:
          p = {fv, fv};
          break;
      }
      set(h.parent_edge[e], p);
    }
    for (VertexId v : twos) close_vertex(h.parent_vertex[v]);
  }

  const Multigraph& g_;
  Decomposition d_;
  std::vector<Pair> label_;
  std::vector<bool> done_;
};

}  // namespace

Labeling construct_ppp_bridged(const Multigraph& g) {
  if (!is_cubic(g) || !is_connected(g)) {
    throw PreconditionError("construct_ppp_bridged requires a connected cubic graph");
  }
  return BridgeTreeBuilder(g).run();
}

}  // namespace zsmagic
