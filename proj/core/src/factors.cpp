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
#include <bit>
#include <functional>
#include <random>

#include "zsmagic/errors.hpp"
#include "zsmagic/factors.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic {

std::vector<int> EdgeColoring::colour_of(int edge_count) const {
  std::vector<int> out(static_cast<std::size_t>(edge_count), -1);
  for (int c = 0; c < 3; ++c) {
    for (EdgeId e : classes[c]) out[e] = c;
  }
  return out;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const Multigraph& g, const ColoringOptions& options)
      : g_(g), options_(options), colour_(static_cast<std::size_t>(g.size()), -1) {
    if (options.seed) rng_.seed(*options.seed);
  }

  // Colours the edges of one connected component.
  bool colour_component(const std::vector<EdgeId>& edges) {
    edges_ = edges;
    first_ = true;
    return search();
  }

  const std::vector<int>& colours() const { return colour_; }

 private:
  unsigned available(EdgeId e) const {
    unsigned mask = 0b111;
    const auto [u, v] = g_.endpoints(e);
    for (VertexId w : {u, v}) {
      for (EdgeId f : g_.incident_edges(w)) {
        if (f != e && colour_[f] >= 0) mask &= ~(1u << colour_[f]);
      }
    }
    return mask;
  }

  bool search() {
    EdgeId pick = -1;
    int best = 4;
    for (EdgeId e : edges_) {
      if (colour_[e] >= 0) continue;
      const int count = std::popcount(available(e));
      if (count < best) {
        best = count;
        pick = e;
      }
    }
    if (pick == -1) return true;
    if (best == 0) return false;

    std::array<int, 3> order{0, 1, 2};
    if (options_.seed) std::shuffle(order.begin(), order.end(), rng_);
    const unsigned mask = available(pick);
    const bool symmetric = first_;
    first_ = false;
    for (int c : order) {
      if ((mask & (1u << c)) == 0) continue;
      if (++nodes_ > options_.budget) throw BudgetExhausted("3-edge-colouring search exceeded its node budget");
      colour_[pick] = c;
      if (forward_ok(pick) && search()) return true;
      colour_[pick] = -1;
      // Colours are interchangeable before anything is fixed.
      if (symmetric) break;
    }
    return false;
  }

  bool forward_ok(EdgeId e) const {
    const auto [u, v] = g_.endpoints(e);
    for (VertexId w : {u, v}) {
      for (EdgeId f : g_.incident_edges(w)) {
        if (colour_[f] < 0 && available(f) == 0) return false;
      }
    }
    return true;
  }

  const Multigraph& g_;
  const ColoringOptions& options_;
  std::vector<int> colour_;
  std::vector<EdgeId> edges_;
  std::mt19937_64 rng_;
  std::int64_t nodes_ = 0;
  bool first_ = true;
};

}  // namespace

std::optional<EdgeColoring> three_edge_coloring(const Multigraph& g, const ColoringOptions& options) {
  if (!is_cubic(g)) throw PreconditionError("three_edge_coloring requires a cubic graph");
  // Each colour class of a cubic graph is a perfect matching, so an odd order
  // or a bridge (by parity) rules a colouring out.
  if (g.order() % 2 != 0 || !find_bridges(g).empty()) return std::nullopt;

  ColoringSearch search(g, options);
  const auto labels = component_labels(g);
  const int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<EdgeId>> per_component(static_cast<std::size_t>(count));
  for (EdgeId e = 0; e < g.size(); ++e) per_component[labels[g.endpoints(e).u]].push_back(e);
  for (const auto& edges : per_component) {
    if (!search.colour_component(edges)) return std::nullopt;
  }
  EdgeColoring out;
  for (EdgeId e = 0; e < g.size(); ++e) out.classes[search.colours()[e]].push_back(e);
  return out;
}

int chromatic_index_cubic(const Multigraph& g, const ColoringOptions& options) {
  return three_edge_coloring(g, options) ? 3 : 4;
}

}  // namespace zsmagic
