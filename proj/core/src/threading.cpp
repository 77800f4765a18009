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

// Threadings: vertex-disjoint paths pairing up the degree-2 vertices of a
// connected graph with maximum degree 3.
//
// Paths are grown one at a time. With the current system P and two
// uncovered degree-2 vertices x, y joined by a shortest path Q that meets no
// other uncovered degree-2 vertex, the symmetric difference of E(P) and E(Q)
// has degree 1 exactly at x, y and the old end vertices and degree 0 or 2
// elsewhere (max degree 3 forces Q and P to share an edge wherever they
// meet). Its path components therefore form a system with one more path.

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>

#include "zsmagic/errors.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic {

namespace {

constexpr int kExhaustiveEdgeLimit = 24;

void check_threading_input(const Multigraph& g, std::vector<VertexId>& twos) {
  if (!is_connected(g)) throw PreconditionError("threading requires a connected graph");
  if (g.order() > 1 && g.min_degree() < 2) throw PreconditionError("threading requires minimum degree 2");
  if (g.max_degree() > 3) throw PreconditionError("threading requires maximum degree at most 3");
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) twos.push_back(v);
  }
  if (twos.size() % 2 != 0) {
    throw PreconditionError("threading requires an even number of degree-2 vertices");
  }
}

// Splits an edge set of max degree 2 into its path components.
std::vector<std::vector<EdgeId>> path_components(const Multigraph& g, const std::vector<bool>& in_set,
                                                 std::vector<std::pair<VertexId, VertexId>>& ends) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!in_set[e]) continue;
    ++deg[g.endpoints(e).u];
    ++deg[g.endpoints(e).v];
  }
  std::vector<bool> used(static_cast<std::size_t>(g.size()), false);
  std::vector<std::vector<EdgeId>> out;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (deg[s] != 1) continue;
    bool fresh = true;
    for (EdgeId e : g.incident_edges(s)) {
      if (in_set[e] && used[e]) fresh = false;
    }
    if (!fresh) continue;
    std::vector<EdgeId> path;
    VertexId at = s;
    while (true) {
      EdgeId next = -1;
      for (EdgeId e : g.incident_edges(at)) {
        if (in_set[e] && !used[e]) {
          next = e;
          break;
        }
      }
      if (next == -1) break;
      used[next] = true;
      path.push_back(next);
      at = g.endpoints(next).other(at);
    }
    ends.emplace_back(s, at);
    out.push_back(std::move(path));
  }
  return out;
}

std::optional<Threading> augment(const Multigraph& g, const std::vector<VertexId>& twos) {
  std::vector<bool> is_two(static_cast<std::size_t>(g.order()), false);
  for (VertexId v : twos) is_two[v] = true;
  std::vector<bool> covered(static_cast<std::size_t>(g.order()), false);
  std::vector<bool> in_paths(static_cast<std::size_t>(g.size()), false);
  Threading t;

  for (std::size_t round = 0; round < twos.size() / 2; ++round) {
    VertexId x = -1;
    for (VertexId v : twos) {
      if (!covered[v]) {
        x = v;
        break;
      }
    }
    // BFS from x to the nearest other uncovered degree-2 vertex.
    std::vector<EdgeId> via(static_cast<std::size_t>(g.order()), -1);
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::deque<VertexId> queue{x};
    seen[x] = true;
    VertexId y = -1;
    while (!queue.empty() && y == -1) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident_edges(v)) {
        const VertexId w = g.endpoints(e).other(v);
        if (seen[w]) continue;
        seen[w] = true;
        via[w] = e;
        if (is_two[w] && !covered[w]) {
          y = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (y == -1) return std::nullopt;
    std::vector<bool> next = in_paths;
    for (VertexId v = y; v != x; v = g.endpoints(via[v]).other(v)) next[via[v]] = !next[via[v]];

    std::vector<std::pair<VertexId, VertexId>> ends;
    auto paths = path_components(g, next, ends);
    if (paths.size() != round + 1) return std::nullopt;
    // Drop cycle components from the edge set.
    std::fill(next.begin(), next.end(), false);
    for (const auto& p : paths) {
      for (EdgeId e : p) next[e] = true;
    }
    in_paths = std::move(next);
    covered[x] = covered[y] = true;
    t.paths = std::move(paths);
    t.endpoints = std::move(ends);
  }
  return t;
}

// Backtracking over path systems; only used on small graphs.
std::optional<Threading> exhaustive(const Multigraph& g, const std::vector<VertexId>& twos) {
  std::vector<bool> is_two(static_cast<std::size_t>(g.order()), false);
  for (VertexId v : twos) is_two[v] = true;
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  Threading t;
  std::vector<EdgeId> current;

  std::function<bool()> pair_next;
  std::function<bool(VertexId, VertexId)> extend = [&](VertexId start, VertexId at) -> bool {
    for (EdgeId e : g.incident_edges(at)) {
      const VertexId w = g.endpoints(e).other(at);
      if (used[w]) continue;
      current.push_back(e);
      used[w] = true;
      if (is_two[w]) {
        t.paths.push_back(current);
        t.endpoints.emplace_back(start, w);
        if (pair_next()) return true;
        t.paths.pop_back();
        t.endpoints.pop_back();
      } else if (extend(start, w)) {
        return true;
      }
      used[w] = false;
      current.pop_back();
    }
    return false;
  };
  pair_next = [&]() -> bool {
    VertexId start = -1;
    for (VertexId v : twos) {
      if (!used[v]) {
        start = v;
        break;
      }
    }
    if (start == -1) return true;
    std::vector<EdgeId> saved = std::move(current);
    current.clear();
    used[start] = true;
    if (extend(start, start)) return true;
    used[start] = false;
    current = std::move(saved);
    return false;
  };
  if (pair_next()) return t;
  return std::nullopt;
}

}  // namespace

Threading threading(const Multigraph& g) {
  std::vector<VertexId> twos;
  check_threading_input(g, twos);
  if (auto t = augment(g, twos); t && validate_threading(g, *t)) return *std::move(t);
  if (g.size() <= kExhaustiveEdgeLimit) {
    if (auto t = exhaustive(g, twos)) return *std::move(t);
  }
  throw Error("no threading found");
}

bool validate_threading(const Multigraph& g, const Threading& t) {
  std::vector<int> twos;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) twos.push_back(v);
  }
  if (t.paths.size() != t.endpoints.size() || 2 * t.paths.size() != twos.size()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<VertexId> ends;
  for (std::size_t i = 0; i < t.paths.size(); ++i) {
    const auto [a, b] = t.endpoints[i];
    if (!g.has_vertex(a) || !g.has_vertex(b) || a == b) return false;
    if (t.paths[i].empty()) return false;
    VertexId at = a;
    if (seen[at]) return false;
    seen[at] = true;
    for (EdgeId e : t.paths[i]) {
      if (!g.has_edge(e)) return false;
      const auto [u, v] = g.endpoints(e);
      if (u != at && v != at) return false;
      at = g.endpoints(e).other(at);
      if (seen[at]) return false;
      seen[at] = true;
    }
    if (at != b) return false;
    ends.push_back(a);
    ends.push_back(b);
  }
  std::sort(ends.begin(), ends.end());
  return ends == twos;
}

}  // namespace zsmagic
