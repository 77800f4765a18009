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


// Independent reference implementations and random generators for tests.
// Everything here is deliberately naive so it can be trusted as an oracle.

#ifndef ZSMAGIC_TESTS_SUPPORT_ORACLES_HPP_
#define ZSMAGIC_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "zsmagic/labeling.hpp"
#include "zsmagic/multigraph.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic::testing {

Multigraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

Multigraph cycle(int m);
Multigraph complete(int n);
Multigraph complete_bipartite(int a, int b);
Multigraph star(int leaves);

/// Bridges by deleting each edge and counting components.
std::vector<EdgeId> bridges_by_deletion(const Multigraph& g);

/// Perfect matching existence by branching on the lowest uncovered vertex.
bool has_perfect_matching_exhaustive(const Multigraph& g);

/// Every edge set in which each vertex has degree exactly 2.
std::vector<std::vector<EdgeId>> all_two_factors(const Multigraph& g);

/// Proper 3-edge-colouring existence by plain backtracking in edge order.
bool three_colourable_exhaustive(const Multigraph& g);

/// Whether a threading exists, by backtracking over simple paths between
/// degree-2 vertices through unused vertices of degree 3.
bool threading_exists_exhaustive(const Multigraph& g);

/// Checks a threading without using the library validator.
bool threading_ok(const Multigraph& g, const Threading& t);

/// Random connected multigraph with degrees in {2,3}, an even number of
/// degree-2 vertices (at least two) and at most `max_order` vertices, from
/// the pairing model with rejection of loops and disconnected draws.
Multigraph random_subcubic(std::mt19937_64& rng, int max_order);

struct BridgedRegular {
  Multigraph graph;
  int hubs = 0;
  int gadgets = 0;
};

/// Random connected r-regular graph (r odd, 3 or 5) with bridges. Hubs are
/// single vertices joined in a random tree; every free hub slot, and both
/// ends when there are no hubs, get a gadget: K_{r+1} minus (r-1)/2 disjoint
/// edges plus a vertex w joined to the ends of the removed edges. Every
/// bridge leaves an odd cycle on both sides.
BridgedRegular random_bridged_regular(std::mt19937_64& rng, int r);

/// Calls `visit` on every connected loopless multigraph with between 1 and
/// `max_edges` edges, up to relabelling in order of first appearance.
void for_each_small_multigraph(int max_edges, const std::function<void(const Multigraph&)>& visit);

/// Reduced labeling with every coordinate equal to `value` per edge.
Labeling constant_labeling(const GroupSpec& group, int edge_count, Residue value);

}  // namespace zsmagic::testing

#endif  // ZSMAGIC_TESTS_SUPPORT_ORACLES_HPP_
