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


#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zsmagic/constructions.hpp"
#include "zsmagic/errors.hpp"
#include "zsmagic/factors.hpp"
#include "zsmagic/families.hpp"
#include "zsmagic/graph_io.hpp"
#include "zsmagic/solver.hpp"
#include "zsmagic/spectra.hpp"
#include "zsmagic/structure.hpp"

namespace zsmagic::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for bad input files and options that only fail after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string graph;
  std::string group;
  std::string labels;
  std::string dot;
  std::string output;
  std::string theorem;
  std::string base;
  std::string gen_kind;
  std::string fixture_name;
  std::string must;
  std::int64_t budget = -1;
  std::uint64_t seed = 0;
  int j = 2;
  int kmax = 4;
  bool oracle = false;
  bool one_factor = false;
  bool two_factor = false;
  bool color3 = false;
};

// --budget, else ZSMAGIC_BUDGET, else the command's default.
std::int64_t budget_for(const Options& o, std::int64_t fallback) {
  if (o.budget >= 0) return o.budget;
  if (const char* env = std::getenv("ZSMAGIC_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) throw UsageError("ZSMAGIC_BUDGET must be a non-negative integer");
    return v;
  }
  return fallback;
}

Multigraph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

GroupSpec load_group(const std::string& text) {
  try {
    return GroupSpec::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

Json edge_list(const std::vector<EdgeId>& edges) { return Json(edges); }

Json labels_json(const Labeling& l) {
  Json rows = Json::array();
  for (const GroupElem& a : l.labels) rows.push_back(a.residues);
  return rows;
}

void maybe_dot(const Options& o, const Multigraph& g, const Labeling* l) {
  if (!o.dot.empty()) write_file(o.dot, to_dot(g, l));
}

void maybe_labels(const Options& o, const Labeling& l) {
  if (!o.output.empty()) write_file(o.output, format_labels(l));
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(o.graph);
  const GroupSpec spec = load_group(o.group);
  SolveOptions so;
  so.budget = budget_for(o, kDefaultBudget);
  if (o.seed != 0) so.seed = o.seed;
  const SolveResult r = o.oracle ? brute_force_oracle(g, spec, so.budget) : solve(g, spec, so);
  Json j;
  j["status"] = to_string(r.status);
  j["group"] = spec.to_string();
  if (r.witness) j["witness"] = labels_json(*r.witness);
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["nodes"] = r.nodes;
  out << j.dump(2) << '\n';
  err << "solve: " << to_string(r.status) << " over " << spec.to_string() << " after " << r.nodes << " nodes";
  if (!r.reason.empty()) err << " (" << r.reason << ")";
  err << '\n';
  if (r.witness) {
    maybe_labels(o, *r.witness);
    maybe_dot(o, g, &*r.witness);
  } else {
    maybe_dot(o, g, nullptr);
  }
  return kExitOk;
}

Json check_json(const ZeroSumCheck& c) {
  Json j;
  j["valid"] = c.valid;
  j["zero_labels"] = edge_list(c.zero_labels);
  j["nonzero_weight"] = Json(c.nonzero_weight);
  if (!c.problem.empty()) j["problem"] = c.problem;
  return j;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(o.graph);
  const GroupSpec spec = load_group(o.group);
  const Labeling l = [&] {
    try {
      return parse_labels(read_text_file(o.labels), spec, g.size());
    } catch (const ParseError& e) {
      throw UsageError(o.labels + ": " + e.what());
    }
  }();
  const ZeroSumCheck c = check_zero_sum(g, l);
  out << check_json(c).dump(2) << '\n';
  err << "check: " << (c.valid ? "valid" : "invalid") << " zero-sum " << spec.to_string() << " labeling\n";
  maybe_dot(o, g, &l);
  return c.valid ? kExitOk : kExitDomain;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  const Multigraph input = load_graph(o.graph);
  Multigraph g = input;
  Json j;
  j["theorem"] = o.theorem;
  if (o.theorem == "zzz" && is_cubic(input) && is_connected(input)) {
    if (const auto c = www_obstruction(input)) {
      throw ObstructionError("component " + std::to_string(*c) +
                             " is trivial or bipartite with an odd number of degree-2 vertices");
    }
  }
  const Labeling l = [&] {
    if (o.theorem == "rrr") return construct_rrr(g, o.j);
    if (o.theorem == "sss") return construct_sss(g, o.j);
    if (o.theorem == "ppd") return construct_ppd(g);
    if (o.theorem == "ppp") return construct_ppp(g);
    if (o.theorem == "zzz") return construct_zzz(g);
    if (o.theorem == "fff") {
      // The input is the base graph; the labeled graph is M_2 of it.
      g = m2(input);
      j["graph"] = format_graph(g);
      return construct_fff(input);
    }
    SolveOptions so;
    so.budget = budget_for(o, kDefaultBudget);
    Z2kResult r = construct_z2k(g, so);
    j["k"] = r.k;
    return std::move(r.labeling);
  }();
  const ZeroSumCheck c = check_zero_sum(g, l);
  j["group"] = l.group.to_string();
  j["verified"] = c.valid;
  j["labels"] = format_labels(l);
  out << j.dump(2) << '\n';
  err << "construct " << o.theorem << ": " << l.group.to_string() << " labeling of " << g.size() << " edges, "
      << (c.valid ? "verified" : "NOT verified") << '\n';
  maybe_labels(o, l);
  maybe_dot(o, g, &l);
  return c.valid ? kExitOk : kExitDomain;
}

std::vector<EdgeId> parse_edge_ids(const std::string& text, int edge_count) {
  std::vector<EdgeId> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int e = -1;
    try {
      e = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || e < 0 || e >= edge_count) throw UsageError("bad edge id '" + item + "' in --must");
    ids.push_back(e);
  }
  return ids;
}

int cmd_factor(const Options& o, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(o.graph);
  Json j;
  if (o.one_factor) {
    const auto m = perfect_matching(g);
    j["one_factor"] = m ? Json(m->edges) : Json(nullptr);
    err << "one-factor: " << (m ? "found" : "none") << '\n';
  }
  if (o.two_factor) {
    const auto f = two_factor_containing(g, parse_edge_ids(o.must, g.size()));
    j["two_factor"] = f ? Json(f->edges) : Json(nullptr);
    err << "two-factor: " << (f ? "found" : "none") << '\n';
  }
  if (o.color3) {
    ColoringOptions co;
    co.budget = budget_for(o, co.budget);
    const auto c = three_edge_coloring(g, co);
    if (c) {
      j["color3"] = Json::array({c->classes[0], c->classes[1], c->classes[2]});
    } else {
      j["color3"] = nullptr;
    }
    err << "3-edge-colouring: " << (c ? "found" : "none") << '\n';
  }
  if (j.is_null()) throw UsageError("factor needs --one-factor, --two-factor or --color3");
  out << j.dump(2) << '\n';
  maybe_dot(o, g, nullptr);
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(o.graph);
  const Decomposition d = decompose(g);
  Json j;
  j["order"] = g.order();
  j["size"] = g.size();
  j["connected"] = is_connected(g);
  j["cubic"] = is_cubic(g);
  j["bridges"] = edge_list(d.bridges);
  Json comps = Json::array();
  for (const BridgeComponent& c : d.components) {
    Json cj;
    cj["type"] = to_string(c.type);
    cj["vertices"] = Json(c.vertices);
    cj["edges"] = Json(c.edges);
    cj["bridges"] = Json(c.bridges);
    comps.push_back(cj);
  }
  j["components"] = comps;
  Json tree = Json::array();
  for (const TreeEdge& t : d.tree_edges) tree.push_back({t.a, t.b, t.bridge});
  j["tree_edges"] = tree;
  out << j.dump(2) << '\n';
  err << "analyze: " << g.order() << " vertices, " << g.size() << " edges, " << d.bridges.size() << " bridges, "
      << d.components.size() << " components\n";
  maybe_dot(o, g, nullptr);
  return kExitOk;
}

Json zeta_json(const ZetaValue& z, int j) {
  Json out;
  out["modulus"] = 2 * j;
  switch (z.kind) {
    case ZetaValue::Kind::kExact:
      out["kind"] = "exact";
      out["value"] = z.hi;
      break;
    case ZetaValue::Kind::kInterval:
      out["kind"] = "interval";
      out["lo"] = z.lo;
      out["hi"] = z.hi;
      break;
    case ZetaValue::Kind::kInfinite:
      out["kind"] = "infinite";
      break;
  }
  out["basis"] = z.basis;
  Json probes = Json::array();
  for (const ZetaProbe& p : z.probes) {
    probes.push_back({{"k", p.k}, {"status", to_string(p.status)}, {"nodes", p.nodes}});
  }
  out["probes"] = probes;
  if (z.witness) {
    out["witness_group"] = z.witness->group.to_string();
    out["witness"] = labels_json(*z.witness);
  }
  return out;
}

Json classification_json(const Classification& c) {
  Json j;
  j["category"] = std::string(1, c.category);
  j["has_one_factor"] = c.has_one_factor;
  j["bridgeless"] = c.bridgeless;
  j["chromatic_index"] = c.chromatic_index ? Json(*c.chromatic_index) : Json(nullptr);
  j["summary"] = c.summary;
  Json fams = Json::array();
  for (const FamilyStatus& f : c.families) {
    fams.push_back({{"group", f.group}, {"status", to_string(f.status)}, {"basis", f.basis}});
  }
  j["families"] = fams;
  return j;
}

void require_connected_cubic(const Multigraph& g) {
  if (!is_cubic(g) || !is_connected(g)) throw PreconditionError("classify needs a connected cubic graph");
}

int cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(o.graph);
  SpectraOptions so;
  so.budget = budget_for(o, so.budget);
  const bool cubic_connected = is_cubic(g) && is_connected(g);
  Json j;
  j["zim"] = is_cubic(g) ? to_string(zim_cubic(g)) : "out of scope for non-cubic graphs";
  const ZetaValue z = zeta(g, o.j, o.kmax, so);
  j["zeta"] = zeta_json(z, o.j);
  if (cubic_connected) j["classification"] = classification_json(classify_cubic(g, so));
  out << j.dump(2) << '\n';
  err << "spectrum: zeta_" << 2 * o.j << " = " << z.to_string() << '\n';
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(o.graph);
  require_connected_cubic(g);
  SpectraOptions so;
  so.budget = budget_for(o, so.budget);
  const Classification c = classify_cubic(g, so);
  out << classification_json(c).dump(2) << '\n';
  err << "classify: category " << c.category << ": " << c.summary << '\n';
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  Multigraph g;
  if (o.gen_kind == "martini") {
    g = martini();
  } else if (o.gen_kind == "fixture") {
    if (o.fixture_name.empty()) throw UsageError("gen fixture needs a fixture name");
    g = fixture(o.fixture_name).graph;
  } else {
    if (o.base.empty()) throw UsageError("gen " + o.gen_kind + " needs --base");
    const Multigraph base = load_graph(o.base);
    g = o.gen_kind == "m1" ? m1(base) : m2(base);
  }
  out << format_graph(g);
  err << "gen " << o.gen_kind << ": " << g.order() << " vertices, " << g.size() << " edges\n";
  maybe_dot(o, g, nullptr);
  return kExitOk;
}

void add_budget(CLI::App* sub, Options& o) {
  sub->add_option("--budget", o.budget, "Search node budget (default from ZSMAGIC_BUDGET)")
      ->check(CLI::NonNegativeNumber);
}

void add_dot(CLI::App* sub, Options& o) { sub->add_option("--dot", o.dot, "Write a DOT rendering to this path"); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-sum group-magic labelings of multigraphs", "zsmagic"};
  app.require_subcommand(1, 1);
  Options o;

  auto* solve_cmd = app.add_subcommand("solve", "Decide zero-sum magicness over a group");
  solve_cmd->add_option("--graph", o.graph, "Edge-list file")->required();
  solve_cmd->add_option("--group", o.group, "Group such as Z4 or Z2^3xZ4")->required();
  add_budget(solve_cmd, o);
  solve_cmd->add_flag("--oracle", o.oracle, "Use the brute-force oracle (the budget is its cap)");
  solve_cmd->add_option("--seed", o.seed, "Randomise the value order with this seed");
  solve_cmd->add_option("-o,--output", o.output, "Write the witness in labels format");
  add_dot(solve_cmd, o);

  auto* check_cmd = app.add_subcommand("check", "Verify a labels file");
  check_cmd->add_option("--graph", o.graph, "Edge-list file")->required();
  check_cmd->add_option("--group", o.group, "Group such as Z4")->required();
  check_cmd->add_option("--labels", o.labels, "Labels file")->required();
  add_dot(check_cmd, o);

  auto* construct_cmd = app.add_subcommand("construct", "Build a labeling constructively");
  construct_cmd->add_option("--graph", o.graph, "Edge-list file (the base graph for fff)")->required();
  construct_cmd->add_option("--theorem", o.theorem, "Construction to run")
      ->required()
      ->check(CLI::IsMember({"rrr", "sss", "ppd", "ppp", "zzz", "fff", "z2k"}));
  construct_cmd->add_option("--j", o.j, "Half the modulus for rrr and sss")->check(CLI::PositiveNumber);
  add_budget(construct_cmd, o);
  construct_cmd->add_option("-o,--output", o.output, "Write the labeling in labels format");
  add_dot(construct_cmd, o);

  auto* factor_cmd = app.add_subcommand("factor", "Find 1-factors, 2-factors and 3-edge-colourings");
  factor_cmd->add_option("--graph", o.graph, "Edge-list file")->required();
  factor_cmd->add_flag("--one-factor", o.one_factor, "Find a perfect matching");
  auto* two = factor_cmd->add_flag("--two-factor", o.two_factor, "Find a 2-factor (cubic graphs)");
  factor_cmd->add_option("--must", o.must, "Comma-separated edges the 2-factor must contain")->needs(two);
  factor_cmd->add_flag("--color3", o.color3, "Find a proper 3-edge-colouring");
  add_budget(factor_cmd, o);
  add_dot(factor_cmd, o);

  auto* analyze_cmd = app.add_subcommand("analyze", "Bridges and the bridge-tree decomposition");
  analyze_cmd->add_option("--graph", o.graph, "Edge-list file")->required();
  add_dot(analyze_cmd, o);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "zim and zeta report");
  spectrum_cmd->add_option("--graph", o.graph, "Edge-list file")->required();
  spectrum_cmd->add_option("--j", o.j, "zeta is computed for Z_{2j}")->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--kmax", o.kmax, "Largest k probed by the solver")->check(CLI::NonNegativeNumber);
  add_budget(spectrum_cmd, o);

  auto* classify_cmd = app.add_subcommand("classify", "Group classification of a connected cubic graph");
  classify_cmd->add_option("--graph", o.graph, "Edge-list file")->required();
  add_budget(classify_cmd, o);

  auto* gen_cmd = app.add_subcommand("gen", "Print a generated graph as an edge list");
  gen_cmd->add_option("kind", o.gen_kind, "martini, m1, m2 or fixture")
      ->required()
      ->check(CLI::IsMember({"martini", "m1", "m2", "fixture"}));
  gen_cmd->add_option("name", o.fixture_name, "Fixture name")->check(CLI::IsMember(fixture_names()));
  gen_cmd->add_option("--base", o.base, "Base graph for m1 and m2");
  add_dot(gen_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(o, out, err);
    if (check_cmd->parsed()) return cmd_check(o, out, err);
    if (construct_cmd->parsed()) return cmd_construct(o, out, err);
    if (factor_cmd->parsed()) return cmd_factor(o, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(o, out, err);
    if (spectrum_cmd->parsed()) return cmd_spectrum(o, out, err);
    if (classify_cmd->parsed()) return cmd_classify(o, out, err);
    return cmd_gen(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ObstructionError& e) {
    out << Json{{"error", "obstruction"}, {"detail", e.what()}}.dump(2) << '\n';
    err << "obstruction: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    out << Json{{"error", "domain"}, {"detail", e.what()}}.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace zsmagic::cli
