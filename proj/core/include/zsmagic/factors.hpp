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


#ifndef ZSMAGIC_FACTORS_HPP_
#define ZSMAGIC_FACTORS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "zsmagic/multigraph.hpp"

namespace zsmagic {

struct Matching {
  std::vector<EdgeId> edges;  // sorted
};

struct TwoFactor {
  std::vector<EdgeId> edges;  // sorted
};

/// Proper 3-edge-colouring; every class is a matching.
struct EdgeColoring {
  std::array<std::vector<EdgeId>, 3> classes;  // each sorted

  /// Colour 0, 1 or 2 of every edge.
  std::vector<int> colour_of(int edge_count) const;
};

/// Maximum matching by Edmonds' blossom algorithm. Parallel edges collapse to
/// one candidate; the smallest eligible edge id of a pair is reported.
/// Edges flagged in `avoid` are never used.
Matching maximum_matching(const Multigraph& g, const std::vector<bool>* avoid = nullptr);

std::optional<Matching> perfect_matching(const Multigraph& g);

std::optional<Matching> perfect_matching_avoiding(const Multigraph& g,
                                                  const std::vector<EdgeId>& avoid);

/// Perfect matching through `e`. Throws PreconditionError if `g` is not cubic.
std::optional<Matching> one_factor_containing(const Multigraph& g, EdgeId e);

/// 2-factor containing every edge of `must`, computed as the complement of a
/// perfect matching that avoids them. Throws PreconditionError if `g` is not
/// cubic.
std::optional<TwoFactor> two_factor_containing(const Multigraph& g,
                                               const std::vector<EdgeId>& must);

struct ColoringOptions {
  std::int64_t budget = 10'000'000;  // search nodes
  std::optional<std::uint64_t> seed;  // shuffles colour order when set
};

/// 3-edge-colouring by backtracking with forward checking, or nullopt when
/// none exists (so the chromatic index is 4). Throws PreconditionError if
/// `g` is not cubic and BudgetExhausted if the search runs out of nodes.
std::optional<EdgeColoring> three_edge_coloring(const Multigraph& g,
                                                const ColoringOptions& options = {});

/// Chromatic index of a cubic graph: 3 or 4.
int chromatic_index_cubic(const Multigraph& g, const ColoringOptions& options = {});

bool is_perfect_matching(const Multigraph& g, const std::vector<EdgeId>& edges);
bool is_two_factor(const Multigraph& g, const std::vector<EdgeId>& edges);

/// Edges of `g` not in `edges`, sorted.
std::vector<EdgeId> complement_edges(const Multigraph& g, const std::vector<EdgeId>& edges);

}  // namespace zsmagic

#endif  // ZSMAGIC_FACTORS_HPP_
