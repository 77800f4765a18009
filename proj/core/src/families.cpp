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


#include "zsmagic/families.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "fixture_data.inc"
#include "zsmagic/errors.hpp"
#include "zsmagic/factors.hpp"
#include "zsmagic/graph_io.hpp"
#include "zsmagic/groups.hpp"

namespace zsmagic {

Multigraph martini() {
  Multigraph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

MartiniAttachment attach_martinis_detailed(const Multigraph& g, const std::vector<VertexId>& at) {
  std::vector<bool> taken(static_cast<std::size_t>(g.order()), false);
  for (VertexId v : at) {
    if (!g.has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
    if (taken[v]) throw PreconditionError("vertex " + std::to_string(v) + " listed twice");
    taken[v] = true;
  }
  MartiniAttachment out{g, {}};
  for (VertexId host : at) {
    MartiniCopy copy;
    copy.host = host;
    copy.a = out.graph.add_vertex();
    copy.b = out.graph.add_vertex();
    copy.c = out.graph.add_vertex();
    copy.edges = {out.graph.add_edge(copy.a, copy.b), out.graph.add_edge(copy.a, copy.b),
                  out.graph.add_edge(copy.a, copy.c), out.graph.add_edge(copy.b, copy.c),
                  out.graph.add_edge(copy.c, host)};
    out.copies.push_back(copy);
  }
  return out;
}

Multigraph attach_martinis(const Multigraph& g, const std::vector<VertexId>& at) {
  return attach_martinis_detailed(g, at).graph;
}

namespace {

MartiniFamilyMember martini_family(const Multigraph& base, int m) {
  if (!is_cubic(base) || !is_two_edge_connected(base)) {
    throw PreconditionError("the base graph must be 2-edge-connected and cubic");
  }
  Subdivision sub = subdivide(base, m);
  std::vector<VertexId> at;
  for (VertexId v = base.order(); v < sub.graph.order(); ++v) at.push_back(v);
  MartiniAttachment att = attach_martinis_detailed(sub.graph, at);
  return MartiniFamilyMember{std::move(att.graph), std::move(sub), std::move(att.copies)};
}

}  // namespace

MartiniFamilyMember m1_detailed(const Multigraph& base) { return martini_family(base, 1); }
MartiniFamilyMember m2_detailed(const Multigraph& base) { return martini_family(base, 2); }
Multigraph m1(const Multigraph& base) { return m1_detailed(base).graph; }
Multigraph m2(const Multigraph& base) { return m2_detailed(base).graph; }

namespace {

const std::map<std::string_view, FixtureRecord>& expected_records() {
  static const std::map<std::string_view, FixtureRecord> records = {
      {"G0", {12, 18, 3, true, 4}},
      {"G1", {18, 27, 3, true, 4}},
      {"G2", {16, 24, 3, false, 4}},
      {"G3", {14, 21, 3, false, 4}},
      {"G4", {18, 27, 4, false, 4}},
      {"G5", {16, 24, 3, false, 4}},
      {"PeStar", {12, 18, 0, true, 4}},
      {"Petersen", {10, 15, 0, true, 4}},
      {"K4", {4, 6, 0, true, 3}},
      {"K23", {5, 6, 0, false, std::nullopt}},
  };
  return records;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, text] : kFixtureSources) out.emplace_back(name);
    return out;
  }();
  return names;
}

std::string_view fixture_source(std::string_view name) {
  for (const auto& [n, text] : kFixtureSources) {
    if (n == name) return text;
  }
  throw PreconditionError("unknown fixture '" + std::string(name) + "'");
}

Fixture fixture(std::string_view name) {
  Fixture f{std::string(name), parse_graph(fixture_source(name)), expected_records().at(name)};
  const Multigraph& g = f.graph;
  FixtureRecord actual{g.order(), g.size(), static_cast<int>(find_bridges(g).size()),
                       perfect_matching(g).has_value(), std::nullopt};
  if (is_cubic(g)) actual.chromatic_index = chromatic_index_cubic(g);
  const FixtureRecord& want = f.expected;
  if (actual.order != want.order || actual.size != want.size || actual.bridges != want.bridges ||
      actual.has_one_factor != want.has_one_factor || actual.chromatic_index != want.chromatic_index) {
    throw Error("fixture '" + f.name + "' does not match its expected record");
  }
  return f;
}

Labeling g1_reference_labels() {
  return parse_labels(kG1Labels, GroupSpec::cyclic_power(4, 1), 27);
}

}  // namespace zsmagic
