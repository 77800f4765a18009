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


#include <algorithm>
#include <deque>
#include <numeric>

#include "zsmagic/errors.hpp"
#include "zsmagic/factors.hpp"

namespace zsmagic {

namespace {

// Edmonds' algorithm on the simple graph underlying a multigraph.
class Blossom {
 public:
  Blossom(const Multigraph& g, const std::vector<bool>* avoid)
      : n_(g.order()),
        adj_(static_cast<std::size_t>(n_)),
        match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_), 0),
        used_(static_cast<std::size_t>(n_), false),
        in_blossom_(static_cast<std::size_t>(n_), false) {
    for (VertexId v = 0; v < n_; ++v) {
      for (EdgeId e : g.incident_edges(v)) {
        if (avoid != nullptr && (*avoid)[e]) continue;
        const VertexId w = g.endpoints(e).other(v);
        if (std::find(adj_[v].begin(), adj_[v].end(), w) == adj_[v].end()) adj_[v].push_back(w);
      }
    }
  }

  const std::vector<VertexId>& run() {
    for (VertexId v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      VertexId end = find_path(v);
      while (end != -1) {
        const VertexId pv = parent_[end];
        const VertexId next = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = next;
      }
    }
    return match_;
  }

 private:
  VertexId lca(VertexId a, VertexId b) {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  VertexId find_path(VertexId root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const VertexId b = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (VertexId i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
              used_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexId> match_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

void require_cubic(const Multigraph& g, const char* what) {
  if (!is_cubic(g)) throw PreconditionError(std::string(what) + " requires a cubic graph");
}

}  // namespace

Matching maximum_matching(const Multigraph& g, const std::vector<bool>* avoid) {
  Blossom blossom(g, avoid);
  const auto& mate = blossom.run();
  Matching m;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (avoid != nullptr && (*avoid)[e]) continue;
    const auto [u, v] = g.endpoints(e);
    if (mate[u] != v) continue;
    // Only the first eligible edge of a parallel class is reported.
    bool first = std::none_of(m.edges.begin(), m.edges.end(), [&](EdgeId f) {
      const auto& p = g.endpoints(f);
      return (p.u == u && p.v == v) || (p.u == v && p.v == u);
    });
    if (first) m.edges.push_back(e);
  }
  return m;
}

std::optional<Matching> perfect_matching(const Multigraph& g) {
  if (g.order() % 2 != 0) return std::nullopt;
  Matching m = maximum_matching(g);
  if (2 * static_cast<int>(m.edges.size()) != g.order()) return std::nullopt;
  return m;
}

std::optional<Matching> perfect_matching_avoiding(const Multigraph& g,
                                                  const std::vector<EdgeId>& avoid) {
  if (g.order() % 2 != 0) return std::nullopt;
  std::vector<bool> skip(static_cast<std::size_t>(g.size()), false);
  for (EdgeId e : avoid) {
    if (!g.has_edge(e)) throw PreconditionError("unknown edge " + std::to_string(e));
    skip[e] = true;
  }
  Matching m = maximum_matching(g, &skip);
  if (2 * static_cast<int>(m.edges.size()) != g.order()) return std::nullopt;
  return m;
}

std::optional<Matching> one_factor_containing(const Multigraph& g, EdgeId e) {
  require_cubic(g, "one_factor_containing");
  if (!g.has_edge(e)) throw PreconditionError("unknown edge " + std::to_string(e));
  if (g.order() % 2 != 0) return std::nullopt;
  const auto [u, v] = g.endpoints(e);
  std::vector<bool> skip(static_cast<std::size_t>(g.size()), false);
  for (VertexId w : {u, v}) {
    for (EdgeId f : g.incident_edges(w)) skip[f] = true;
  }
  Matching m = maximum_matching(g, &skip);
  if (2 * static_cast<int>(m.edges.size()) + 2 != g.order()) return std::nullopt;
  m.edges.insert(std::lower_bound(m.edges.begin(), m.edges.end(), e), e);
  return m;
}

std::optional<TwoFactor> two_factor_containing(const Multigraph& g,
                                               const std::vector<EdgeId>& must) {
  require_cubic(g, "two_factor_containing");
  auto m = perfect_matching_avoiding(g, must);
  if (!m) return std::nullopt;
  return TwoFactor{complement_edges(g, m->edges)};
}

bool is_perfect_matching(const Multigraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) return false;
    ++hits[g.endpoints(e).u];
    ++hits[g.endpoints(e).v];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool is_two_factor(const Multigraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
  for (EdgeId e : edges) {
    if (!g.has_edge(e) || seen[e]) return false;
    seen[e] = true;
    ++hits[g.endpoints(e).u];
    ++hits[g.endpoints(e).v];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 2; });
}

std::vector<EdgeId> complement_edges(const Multigraph& g, const std::vector<EdgeId>& edges) {
  std::vector<bool> in(static_cast<std::size_t>(g.size()), false);
  for (EdgeId e : edges) in[e] = true;
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!in[e]) out.push_back(e);
  }
  return out;
}

}  // namespace zsmagic
