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


#ifndef ZSMAGIC_CONSTRUCTIONS_HPP_
#define ZSMAGIC_CONSTRUCTIONS_HPP_

#include "zsmagic/labeling.hpp"
#include "zsmagic/multigraph.hpp"
#include "zsmagic/solver.hpp"

namespace zsmagic {

// Every builder below checks its result with check_zero_sum before
// returning and throws Error if the check fails.

/// Z_{2j}^{3+|B|} labeling of a connected graph with at least one bridge,
/// j >= 2. One coordinate per bridge carries an odd-cycle gadget; the last
/// three carry j times a Z_2^3 labeling of G - B(G). Throws
/// ObstructionError when deleting some bridge leaves a bipartite or
/// trivial component.
Labeling construct_rrr(const Multigraph& g, int j);

/// Z_{2j}^6 labeling for even j under the same hypotheses. Graphs with at
/// most three bridges get the previous labeling padded with zero
/// coordinates.
Labeling construct_sss(const Multigraph& g, int j);

/// Z_4^3 labeling of a connected cubic graph. With at most two bridges the
/// one-factor Z_4 labeling is padded; otherwise 2-factors of the smoothed
/// leaf components carry the leaf bridge labels.
Labeling construct_ppd(const Multigraph& g);

/// Z_4 labeling (2 on a perfect matching, 1 elsewhere) when a 1-factor
/// exists, otherwise a Z_4^2 labeling built component by component along
/// the bridge tree.
Labeling construct_ppp(const Multigraph& g);

/// The Z_4^2 bridge-tree construction, applied even when a 1-factor exists.
/// Requires a connected cubic graph with at least one bridge.
Labeling construct_ppp_bridged(const Multigraph& g);

/// 2 on a perfect matching and 1 on the complementary 2-factor. Throws
/// ObstructionError when the cubic graph has no 1-factor.
Labeling one_factor_z4_labeling(const Multigraph& g);

/// Z_2^3 x Z_4 labeling of a connected cubic graph in which every component
/// of G - B(G) is non-trivial and has exactly one or an even number of
/// degree-2 vertices. Throws ObstructionError otherwise.
Labeling construct_zzz(const Multigraph& g);

/// Z_2 x Z_4 labeling of m2(base) (vertex and edge ids as produced by
/// `m2`), built from a 3-edge-colouring of the base graph. Throws
/// ObstructionError when the base graph has chromatic index 4.
Labeling construct_fff(const Multigraph& base);

/// Turns a zero-sum Z_2^k0 x Z_4 labeling of a connected cubic graph into
/// one over Z_2^min(3,k0) x Z_4. Labelings with k0 <= 3 come back as they
/// are. Throws PreconditionError when `l` is not a valid labeling of that
/// shape.
Labeling lift_lemma(const Multigraph& g, const Labeling& l);

struct Z2kResult {
  int k = 0;
  Labeling labeling;
};

/// Z_2^k labeling with the smallest k in {1, 2, 3} of a 2-edge-connected
/// graph, found by solving k = 1, 2, 3 in turn. Throws BudgetExhausted if a
/// smaller k cannot be ruled out within the budget.
Z2kResult construct_z2k(const Multigraph& g, const SolveOptions& options = {});

/// Some Z_2^3 labeling of a 2-edge-connected graph (not necessarily with
/// the fewest coordinates in use). Cheap special cases first, then the
/// solver.
Labeling z2_cubed_labeling(const Multigraph& g, const SolveOptions& options = {});

}  // namespace zsmagic

#endif  // ZSMAGIC_CONSTRUCTIONS_HPP_
