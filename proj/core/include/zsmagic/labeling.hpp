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

#ifndef ZSMAGIC_LABELING_HPP_
#define ZSMAGIC_LABELING_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "zsmagic/groups.hpp"
#include "zsmagic/multigraph.hpp"

namespace zsmagic {

/// Assignment of a group element to every edge, indexed by EdgeId.
struct Labeling {
  GroupSpec group;
  std::vector<GroupElem> labels;

  const GroupElem& operator[](EdgeId e) const { return labels[static_cast<std::size_t>(e)]; }
  std::size_t size() const { return labels.size(); }
};

/// Builds a labeling from per-coordinate residue columns: `columns[i][e]` is
/// coordinate i of the label of edge e.
Labeling labeling_from_columns(const GroupSpec& group,
                               const std::vector<std::vector<Residue>>& columns);

/// Per-coordinate residue columns of `l`.
std::vector<std::vector<Residue>> columns_of(const Labeling& l);

/// Appends the coordinates of `extra` after those of `base`; both must label
/// the same edges.
Labeling concat(const Labeling& base, const Labeling& extra);

/// Pads with zero coordinates of modulus `n` up to `arity` coordinates.
Labeling pad_with_zeros(const Labeling& l, Residue n, std::size_t arity);

/// Labels-file text: one `e <edge-id> <c_1> ... <c_m>` line per edge.
std::string format_labels(const Labeling& l);

/// Parses a labels file for a graph with `edge_count` edges. Every edge must
/// appear exactly once. Throws ParseError.
Labeling parse_labels(std::string_view text, const GroupSpec& group, int edge_count);

}  // namespace zsmagic

#endif  // ZSMAGIC_LABELING_HPP_
