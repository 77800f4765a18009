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


#include "zsmagic/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "zsmagic/errors.hpp"
#include "zsmagic/modular_system.hpp"
#include "zsmagic/spectra.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic {

GroupElem weight(const Multigraph& g, const Labeling& l, VertexId v) {
  if (!g.has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
  if (static_cast<int>(l.size()) != g.size()) throw PreconditionError("labeling does not cover every edge");
  GroupElem sum = l.group.zero();
  for (EdgeId e : g.incident_edges(v)) sum = add(l.group, sum, l[e]);
  return sum;
}

ZeroSumCheck check_zero_sum(const Multigraph& g, const Labeling& l) {
  ZeroSumCheck out;
  if (static_cast<int>(l.size()) != g.size()) {
    out.problem = "labeling has " + std::to_string(l.size()) + " labels for " +
                  std::to_string(g.size()) + " edges";
    return out;
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!l.group.conforms(l[e])) {
      out.problem = "label of edge " + std::to_string(e) + " is not an element of " + l.group.to_string();
      return out;
    }
    if (is_zero(l[e])) out.zero_labels.push_back(e);
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!is_zero(weight(g, l, v))) out.nonzero_weight.push_back(v);
  }
  out.valid = out.zero_labels.empty() && out.nonzero_weight.empty();
  return out;
}

bool check_bridge_parity(const Multigraph& g, const Labeling& l) {
  if (!is_cubic(g)) throw PreconditionError("bridge parity applies to cubic graphs");
  if (!l.group.all_moduli_even()) throw PreconditionError("bridge parity needs all moduli even");
  for (EdgeId e : find_bridges(g)) {
    for (Residue r : l[e].residues) {
      if (r % 2 != 0) return false;
    }
  }
  return true;
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSat:
      return "sat";
    case SolveStatus::kUnsat:
      return "unsat";
    case SolveStatus::kUnknown:
      break;
  }
  return "unknown";
}

namespace {

struct Slot {
  std::size_t coord = 0;
  Residue order = 2;
  std::vector<std::pair<EdgeId, Residue>> support;  // nonzero entries
};

class NowhereZeroSearch {
 public:
  NowhereZeroSearch(const Multigraph& g, const GroupSpec& spec, std::vector<Slot> slots,
                    const SolveOptions& options)
      : g_(g), spec_(spec), options_(options), slots_(std::move(slots)) {
    if (options.seed) rng_.seed(*options.seed);
    order_slots();
    partial_.assign(spec.arity(), std::vector<Residue>(static_cast<std::size_t>(g.size()), 0));
  }

  // Returns kSat (witness filled), kUnsat or kUnknown.
  SolveStatus run() {
    try {
      if (dfs(0)) return SolveStatus::kSat;
      return SolveStatus::kUnsat;
    } catch (const BudgetExhausted&) {
      return SolveStatus::kUnknown;
    }
  }

  std::int64_t nodes() const { return nodes_; }

  Labeling witness() const {
    Labeling out{spec_, {}};
    for (EdgeId e = 0; e < g_.size(); ++e) {
      std::vector<Residue> r(spec_.arity());
      for (std::size_t c = 0; c < spec_.arity(); ++c) r[c] = partial_[c][e];
      out.labels.push_back(GroupElem{std::move(r)});
    }
    return out;
  }

 private:
  // Greedy order: prefer the slot that completes the most edges, then the one
  // touching the most edges already in play.
  void order_slots() {
    const std::size_t m = slots_.size();
    std::vector<int> remaining(static_cast<std::size_t>(g_.size()), 0);
    std::vector<bool> touched(static_cast<std::size_t>(g_.size()), false);
    for (const Slot& s : slots_) {
      for (const auto& [e, w] : s.support) ++remaining[e];
    }
    std::vector<bool> used(m, false);
    std::vector<Slot> ordered;
    completes_.assign(m, {});
    for (std::size_t step = 0; step < m; ++step) {
      std::size_t best = m;
      std::pair<int, int> best_score{-1, -1};
      for (std::size_t i = 0; i < m; ++i) {
        if (used[i]) continue;
        std::pair<int, int> score{0, 0};
        for (const auto& [e, w] : slots_[i].support) {
          if (remaining[e] == 1) ++score.first;
          if (touched[e]) ++score.second;
        }
        if (score > best_score) {
          best_score = score;
          best = i;
        }
      }
      used[best] = true;
      for (const auto& [e, w] : slots_[best].support) {
        touched[e] = true;
        if (--remaining[e] == 0) completes_[step].push_back(e);
      }
      ordered.push_back(std::move(slots_[best]));
    }
    slots_ = std::move(ordered);
  }

  bool edge_nonzero(EdgeId e) const {
    for (const auto& column : partial_) {
      if (column[e] != 0) return true;
    }
    return false;
  }

  void apply(const Slot& s, Residue t) {
    if (t == 0) return;
    auto& column = partial_[s.coord];
    const Residue n = spec_.modulus(s.coord);
    for (const auto& [e, w] : s.support) column[e] = mod(column[e] + mulmod(t, w, n), n);
  }

  bool dfs(std::size_t depth) {
    if (depth == slots_.size()) return true;
    const Slot& s = slots_[depth];
    std::vector<Residue> values;
    for (Residue t = 1; t < s.order; ++t) values.push_back(t);
    values.push_back(0);
    if (options_.seed) std::shuffle(values.begin(), values.end(), rng_);
    for (Residue t : values) {
      if (++nodes_ > options_.budget) throw BudgetExhausted("node budget exhausted");
      apply(s, t);
      bool ok = true;
      for (EdgeId e : completes_[depth]) {
        if (!edge_nonzero(e)) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(depth + 1)) return true;
      apply(s, (s.order - t) % s.order);
    }
    return false;
  }

  const Multigraph& g_;
  const GroupSpec& spec_;
  const SolveOptions& options_;
  std::vector<Slot> slots_;
  std::vector<std::vector<EdgeId>> completes_;
  std::vector<std::vector<Residue>> partial_;
  std::mt19937_64 rng_;
  std::int64_t nodes_ = 0;
};

SolveResult finish_sat(const Multigraph& g, Labeling witness, std::int64_t nodes, std::string reason) {
  if (!check_zero_sum(g, witness)) throw Error("internal error: solver produced an invalid labeling");
  return SolveResult{SolveStatus::kSat, std::move(witness), std::move(reason), nodes};
}

long double labeling_count(const Multigraph& g, const GroupSpec& spec) {
  long double count = 1;
  for (int e = 0; e < g.size(); ++e) count *= static_cast<long double>(spec.order() - 1);
  return count;
}

}  // namespace

SolveResult solve(const Multigraph& g, const GroupSpec& spec, const SolveOptions& options) {
  if (spec.order() > kDefaultEnumerationCap) {
    throw PreconditionError("group order " + std::to_string(spec.order()) + " exceeds the solver cap");
  }
  if (g.size() == 0) return finish_sat(g, Labeling{spec, {}}, 0, "no edges");

  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) {
      return SolveResult{SolveStatus::kUnsat, std::nullopt, "vertex " + std::to_string(v) + " has degree 1", 0};
    }
  }
  if (is_connected(g)) {
    if (auto ob = bridge_deletion_obstruction(g)) {
      return SolveResult{SolveStatus::kUnsat, std::nullopt,
                         "deleting bridge " + std::to_string(ob->bridge) + " leaves a " +
                             to_string(ob->kind) + " component",
                         0};
    }
  }

  std::map<Residue, KernelBasis> kernels;
  std::vector<Slot> slots;
  std::vector<bool> live(static_cast<std::size_t>(g.size()), false);
  std::size_t max_gens = 0;
  std::vector<const KernelBasis*> per_coord;
  for (std::size_t c = 0; c < spec.arity(); ++c) {
    const Residue n = spec.modulus(c);
    auto it = kernels.find(n);
    if (it == kernels.end()) it = kernels.emplace(n, zero_weight_kernel(g, n)).first;
    per_coord.push_back(&it->second);
    max_gens = std::max(max_gens, it->second.generators.size());
  }
  // Interleave coordinates so the first generator of every coordinate comes
  // before the second of any.
  for (std::size_t k = 0; k < max_gens; ++k) {
    for (std::size_t c = 0; c < spec.arity(); ++c) {
      const KernelBasis& kb = *per_coord[c];
      if (k >= kb.generators.size()) continue;
      Slot s{c, kb.orders[k], {}};
      for (EdgeId e = 0; e < g.size(); ++e) {
        if (kb.generators[k][e] != 0) {
          s.support.emplace_back(e, kb.generators[k][e]);
          live[e] = true;
        }
      }
      slots.push_back(std::move(s));
    }
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!live[e]) {
      return SolveResult{SolveStatus::kUnsat, std::nullopt,
                         "edge " + std::to_string(e) + " is zero in every zero-weight labeling", 0};
    }
  }

  NowhereZeroSearch search(g, spec, std::move(slots), options);
  const SolveStatus status = search.run();
  if (status == SolveStatus::kSat) return finish_sat(g, search.witness(), search.nodes(), "search");
  if (status == SolveStatus::kUnsat) {
    return SolveResult{SolveStatus::kUnsat, std::nullopt, "solution space exhausted", search.nodes()};
  }
  if (labeling_count(g, spec) <= static_cast<long double>(options.oracle_cap)) {
    SolveResult r = brute_force_oracle(g, spec, options.oracle_cap);
    r.nodes += search.nodes();
    return r;
  }
  return SolveResult{SolveStatus::kUnknown, std::nullopt, "budget exhausted", search.nodes()};
}

SolveResult brute_force_oracle(const Multigraph& g, const GroupSpec& spec, std::int64_t cap) {
  if (labeling_count(g, spec) > static_cast<long double>(cap)) {
    throw PreconditionError("brute force would enumerate more than " + std::to_string(cap) + " labelings");
  }
  const std::vector<GroupElem> values = enumerate_nonzero(spec);
  const int m = g.size();
  // A vertex is checked once its highest-numbered edge is assigned.
  std::vector<std::vector<VertexId>> closes(static_cast<std::size_t>(m));
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto inc = g.incident_edges(v);
    if (!inc.empty()) closes[inc.back()].push_back(v);
  }
  std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
  Labeling l{spec, std::vector<GroupElem>(static_cast<std::size_t>(m), spec.zero())};
  std::int64_t nodes = 0;
  int depth = 0;
  bool advance = false;
  while (depth >= 0) {
    if (depth == m) return finish_sat(g, l, nodes, "enumeration");
    if (advance) {
      if (++pick[depth] == values.size()) {
        pick[depth] = 0;
        --depth;
        continue;
      }
    }
    ++nodes;
    l.labels[depth] = values[pick[depth]];
    bool ok = true;
    for (VertexId v : closes[depth]) {
      if (!is_zero(weight(g, l, v))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++depth;
      advance = false;
    } else {
      advance = true;
    }
  }
  return SolveResult{SolveStatus::kUnsat, std::nullopt, "enumeration exhausted", nodes};
}

}  // namespace zsmagic
