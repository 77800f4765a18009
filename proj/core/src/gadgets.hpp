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


// Shared pieces of the labeling constructions. Not installed.

#ifndef ZSMAGIC_SRC_GADGETS_HPP_
#define ZSMAGIC_SRC_GADGETS_HPP_

#include <optional>
#include <vector>

#include "zsmagic/labeling.hpp"
#include "zsmagic/solver.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic::detail {

/// A path from a start vertex to an odd cycle, and the cycle itself.
struct OddCycleRoute {
  std::vector<EdgeId> path;   // from the start vertex to `attach`; may be empty
  VertexId attach = 0;
  std::vector<EdgeId> cycle;  // closed walk from `attach` back to `attach`, odd length
};

/// Searches the edges flagged in `allowed` by breadth-first search from
/// `start` for a closest odd cycle.
std::optional<OddCycleRoute> odd_cycle_route(const Multigraph& g, VertexId start,
                                             const std::vector<bool>& allowed);

/// Three Z_2 columns labeling every non-trivial component of G - B(G)
/// nowhere-zero with zero weights; bridges get (0,0,0).
std::vector<std::vector<Residue>> component_z2_cubed(const Multigraph& g, const Decomposition& d,
                                                     const SolveOptions& options);

/// G* and G' for a graph whose bridge tree has at least two leaves: the
/// leaf components are cut down to their attachment vertices y_i, which are
/// then merged into one vertex.
struct LeafContraction {
  std::vector<int> leaves;           // component indices
  std::vector<EdgeId> leaf_bridge;   // b_i
  std::vector<VertexId> y;           // y_i, inside the leaf
  std::vector<bool> in_star;         // G edges that belong to G*
  Multigraph merged;                 // G'
  std::vector<EdgeId> merged_origin; // G' edge -> G edge
};

LeafContraction contract_leaves(const Multigraph& g, const Decomposition& d);

/// Throws Error unless `l` is a zero-sum labeling of `g`.
Labeling verified(const Multigraph& g, Labeling l, const char* what);

}  // namespace zsmagic::detail

#endif  // ZSMAGIC_SRC_GADGETS_HPP_
