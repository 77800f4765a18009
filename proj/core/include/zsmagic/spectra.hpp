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


#ifndef ZSMAGIC_SPECTRA_HPP_
#define ZSMAGIC_SPECTRA_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsmagic/labeling.hpp"
#include "zsmagic/multigraph.hpp"
#include "zsmagic/solver.hpp"

namespace zsmagic {

enum class ObstructionKind { kTrivial, kBipartite };

const char* to_string(ObstructionKind k);

struct BridgeObstruction {
  EdgeId bridge = 0;
  ObstructionKind kind = ObstructionKind::kTrivial;
  std::vector<VertexId> side;  // the offending component of G - bridge
};

/// A bridge whose deletion leaves a trivial or bipartite component. Such a
/// bridge is zero in every zero-sum labeling, over every group. Requires a
/// connected graph.
std::optional<BridgeObstruction> bridge_deletion_obstruction(const Multigraph& g);

/// Index of a component of G - B(G) that is trivial, or bipartite with an
/// odd number of degree-2 vertices. Either rules out Z_2^k x Z_4 for every
/// k. Requires a connected cubic graph.
std::optional<int> www_obstruction(const Multigraph& g);

/// Index of a component H of G - B(G) with a degree-3 vertex, no two
/// adjacent degree-3 vertices, and s(H) of chromatic index 4. Such a
/// component rules out Z_2 x Z_4. Requires a connected cubic graph.
std::optional<int> tttx_obstruction(const Multigraph& g);

/// True when every component of G - B(G) is non-trivial and has exactly one
/// or an even number of degree-2 vertices.
bool zzz_condition(const Multigraph& g);

enum class Zim {
  kAllButTwo,         // N \ {2}
  kAllButTwoAndFour,  // N \ {2,4}
};

std::string to_string(Zim z);

/// Integer-magic spectrum of a cubic graph, decided by the 1-factor test.
/// Throws PreconditionError on non-cubic input.
Zim zim_cubic(const Multigraph& g);

struct ZetaProbe {
  int k = 0;
  SolveStatus status = SolveStatus::kUnknown;
  std::int64_t nodes = 0;
};

/// Smallest k with a zero-sum Z_{2j}^k labeling, or bounds on it.
struct ZetaValue {
  enum class Kind { kExact, kInterval, kInfinite };
  Kind kind = Kind::kInterval;
  int lo = 1;
  int hi = 1;  // meaningful unless infinite
  std::optional<Labeling> witness;  // at k = hi, when one was built
  std::string basis;                // how the upper bound was obtained
  std::vector<ZetaProbe> probes;    // solver calls made while refining

  std::string to_string() const;
};

struct SpectraOptions {
  std::int64_t budget = 200'000;  // per solver probe
};

/// zeta_{2j}(G) for a connected graph. Solver probes are made only for
/// k <= k_max.
ZetaValue zeta(const Multigraph& g, int j, int k_max, const SpectraOptions& options = {});

enum class Magic { kMagic, kNotMagic, kUnknown };

const char* to_string(Magic m);

struct FamilyStatus {
  std::string group;  // e.g. "Z2^2xZ4"
  Magic status = Magic::kUnknown;
  std::string basis;
};

struct Classification {
  char category = 'd';  // 'a', 'b', 'c' or 'd'
  bool has_one_factor = false;
  bool bridgeless = false;
  std::optional<int> chromatic_index;  // known when bridgeless
  std::string summary;                 // groups for which G is not zero-sum magic
  std::vector<FamilyStatus> families;  // Z_2^k x Z_4, k = 1..3 (category d)
};

/// Sorts a connected cubic graph into categories a-d by 1-factor, bridges
/// and chromatic index; for category d the Z_2^k x Z_4 families are settled
/// by structural tests, the constructions, or budgeted solver runs.
Classification classify_cubic(const Multigraph& g, const SpectraOptions& options = {});

}  // namespace zsmagic

#endif  // ZSMAGIC_SPECTRA_HPP_
