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


#ifndef ZSMAGIC_SOLVER_HPP_
#define ZSMAGIC_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsmagic/groups.hpp"
#include "zsmagic/labeling.hpp"
#include "zsmagic/multigraph.hpp"

namespace zsmagic {

inline constexpr std::int64_t kDefaultBudget = 10'000'000;
inline constexpr std::int64_t kDefaultOracleCap = 10'000'000;

/// Sum of the labels on the edges at `v`.
GroupElem weight(const Multigraph& g, const Labeling& l, VertexId v);

struct ZeroSumCheck {
  bool valid = false;
  std::vector<EdgeId> zero_labels;       // edges labeled 0
  std::vector<VertexId> nonzero_weight;  // vertices whose weight is not 0
  std::string problem;                   // shape mismatch, if any

  explicit operator bool() const { return valid; }
};

/// Verifies that `l` is a zero-sum labeling of `g`: one label per edge, in
/// the labeling's group, none zero, every vertex weight zero.
ZeroSumCheck check_zero_sum(const Multigraph& g, const Labeling& l);

/// True when every bridge label has only even coordinates. Requires a cubic
/// graph and a group whose moduli are all even.
bool check_bridge_parity(const Multigraph& g, const Labeling& l);

enum class SolveStatus { kSat, kUnsat, kUnknown };

const char* to_string(SolveStatus s);

struct SolveOptions {
  std::int64_t budget = kDefaultBudget;  // search nodes
  std::optional<std::uint64_t> seed;     // randomises value order when set
  std::int64_t oracle_cap = kDefaultOracleCap;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<Labeling> witness;
  std::string reason;
  std::int64_t nodes = 0;
};

/// Decides whether `g` has a zero-sum labeling over `spec`.
///
/// Sat results carry a checked witness. Unsat is reported only with a proof:
/// a degree-1 vertex, an edge forced to zero by the linear constraints, or an
/// exhausted search of the solution space. Otherwise the result is Unknown.
/// Throws PreconditionError when the group order exceeds
/// kDefaultEnumerationCap.
SolveResult solve(const Multigraph& g, const GroupSpec& spec, const SolveOptions& options = {});

/// Plain enumeration of all (|A|-1)^|E| nowhere-zero labelings. Throws
/// PreconditionError when that count exceeds `cap`.
SolveResult brute_force_oracle(const Multigraph& g, const GroupSpec& spec,
                               std::int64_t cap = kDefaultOracleCap);

}  // namespace zsmagic

#endif  // ZSMAGIC_SOLVER_HPP_
