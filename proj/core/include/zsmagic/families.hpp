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


#ifndef ZSMAGIC_FAMILIES_HPP_
#define ZSMAGIC_FAMILIES_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsmagic/labeling.hpp"
#include "zsmagic/multigraph.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic {

/// The martini graph: vertices a=0, b=1, c=2, d=3 and edges
/// ab, ab, ac, bc, cd in that order. d is the degree-1 stem.
Multigraph martini();

/// One martini copy glued onto a host vertex. The copy's a, b, c are new
/// vertices; its stem vertex d is identified with `host`.
struct MartiniCopy {
  VertexId host = 0;
  VertexId a = 0;
  VertexId b = 0;
  VertexId c = 0;
  std::array<EdgeId, 5> edges{};  // ab, ab, ac, bc, c-host
};

struct MartiniAttachment {
  Multigraph graph;
  std::vector<MartiniCopy> copies;  // in the order of `at`
};

/// Identifies the stem of a fresh martini copy with each listed vertex.
/// New vertices and edges are appended copy by copy. Throws
/// PreconditionError on repeated or unknown vertices.
MartiniAttachment attach_martinis_detailed(const Multigraph& g, const std::vector<VertexId>& at);
Multigraph attach_martinis(const Multigraph& g, const std::vector<VertexId>& at);

/// M_1(G) or M_2(G) together with the subdivision it was built from.
struct MartiniFamilyMember {
  Multigraph graph;
  Subdivision subdivision;          // vertex ids are shared with `graph`
  std::vector<MartiniCopy> copies;  // one per subdividing vertex, in id order
};

/// Requires a 2-edge-connected cubic base graph.
MartiniFamilyMember m1_detailed(const Multigraph& base);
MartiniFamilyMember m2_detailed(const Multigraph& base);
Multigraph m1(const Multigraph& base);
Multigraph m2(const Multigraph& base);

struct FixtureRecord {
  int order = 0;
  int size = 0;
  int bridges = 0;
  bool has_one_factor = false;
  std::optional<int> chromatic_index;  // cubic fixtures only
};

struct Fixture {
  std::string name;
  Multigraph graph;
  FixtureRecord expected;
};

/// Names accepted by `fixture`.
const std::vector<std::string>& fixture_names();

/// Loads a checked-in graph and verifies it against its expected record.
/// Throws PreconditionError for an unknown name and Error on a mismatch.
Fixture fixture(std::string_view name);

/// Edge-list text of a fixture, as checked in.
std::string_view fixture_source(std::string_view name);

/// The checked-in zero-sum Z_4 labeling of G1 (fixtures/G1.labels).
Labeling g1_reference_labels();

}  // namespace zsmagic

#endif  // ZSMAGIC_FAMILIES_HPP_
