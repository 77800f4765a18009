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

#include "zsmagic/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "zsmagic/errors.hpp"

namespace zsmagic {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_integer(std::string_view field, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(field) +
                     "' is not an integer");
  }
  return value;
}

template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto fields = split_fields(line);
    if (!fields.empty()) fn(fields, line_no);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::optional<Multigraph> g;
  for_each_record(text, [&](const std::vector<std::string_view>& f, int line_no) {
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (f[0] == "n") {
      if (g) throw ParseError(where + "duplicate 'n' header");
      if (f.size() != 2) throw ParseError(where + "expected 'n <vertex_count>'");
      const long long n = to_integer(f[1], line_no);
      if (n < 0 || n > (1 << 24)) throw ParseError(where + "vertex count out of range");
      g.emplace(static_cast<int>(n));
    } else if (f[0] == "e") {
      if (!g) throw ParseError(where + "edge before 'n' header");
      if (f.size() != 3) throw ParseError(where + "expected 'e <u> <v>'");
      const long long u = to_integer(f[1], line_no);
      const long long v = to_integer(f[2], line_no);
      if (u < 0 || v < 0 || u >= g->order() || v >= g->order()) {
        throw ParseError(where + "endpoint out of range");
      }
      if (u == v) throw ParseError(where + "loops are not allowed");
      g->add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    } else {
      throw ParseError(where + "unknown record '" + std::string(f[0]) + "'");
    }
  });
  if (!g) throw ParseError("missing 'n <vertex_count>' header");
  return *std::move(g);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Multigraph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

std::string format_graph(const Multigraph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

std::string to_dot(const Multigraph& g, const Labeling* labels) {
  std::string out = "graph G {\n";
  for (VertexId v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.endpoints(e);
    out += "  " + std::to_string(u) + " -- " + std::to_string(v);
    out += " [id=\"e" + std::to_string(e) + "\"";
    if (labels != nullptr) {
      const GroupElem& l = (*labels)[e];
      std::string tuple = "(";
      for (std::size_t i = 0; i < l.arity(); ++i) {
        if (i > 0) tuple += ",";
        tuple += std::to_string(l.residues[i]);
      }
      out += ", label=\"" + tuple + ")\"";
    }
    out += "];\n";
  }
  return out + "}\n";
}

Labeling labeling_from_columns(const GroupSpec& group,
                               const std::vector<std::vector<Residue>>& columns) {
  if (columns.size() != group.arity()) throw PreconditionError("column count does not match group");
  const std::size_t edges = columns.empty() ? 0 : columns[0].size();
  Labeling out{group, {}};
  out.labels.reserve(edges);
  for (std::size_t e = 0; e < edges; ++e) {
    std::vector<Residue> r(group.arity());
    for (std::size_t i = 0; i < group.arity(); ++i) r[i] = columns[i].at(e);
    out.labels.push_back(group.make(std::move(r)));
  }
  return out;
}

std::vector<std::vector<Residue>> columns_of(const Labeling& l) {
  std::vector<std::vector<Residue>> cols(l.group.arity(), std::vector<Residue>(l.size()));
  for (std::size_t e = 0; e < l.size(); ++e) {
    for (std::size_t i = 0; i < l.group.arity(); ++i) cols[i][e] = l.labels[e].residues[i];
  }
  return cols;
}

Labeling concat(const Labeling& base, const Labeling& extra) {
  if (base.size() != extra.size()) throw PreconditionError("labelings cover different edge sets");
  std::vector<Residue> moduli = base.group.moduli();
  moduli.insert(moduli.end(), extra.group.moduli().begin(), extra.group.moduli().end());
  Labeling out{GroupSpec(std::move(moduli)), {}};
  for (std::size_t e = 0; e < base.size(); ++e) {
    GroupElem l = base.labels[e];
    l.residues.insert(l.residues.end(), extra.labels[e].residues.begin(), extra.labels[e].residues.end());
    out.labels.push_back(std::move(l));
  }
  return out;
}

Labeling pad_with_zeros(const Labeling& l, Residue n, std::size_t arity) {
  if (l.group.arity() >= arity) return l;
  const std::size_t extra = arity - l.group.arity();
  Labeling zeros{GroupSpec::cyclic_power(n, static_cast<int>(extra)), {}};
  zeros.labels.assign(l.size(), zeros.group.zero());
  return concat(l, zeros);
}

std::string format_labels(const Labeling& l) {
  std::string out = "# group " + l.group.to_string() + "\n";
  for (std::size_t e = 0; e < l.size(); ++e) {
    out += "e " + std::to_string(e);
    for (Residue r : l.labels[e].residues) out += " " + std::to_string(r);
    out += "\n";
  }
  return out;
}

Labeling parse_labels(std::string_view text, const GroupSpec& group, int edge_count) {
  std::vector<std::optional<GroupElem>> seen(static_cast<std::size_t>(edge_count));
  for_each_record(text, [&](const std::vector<std::string_view>& f, int line_no) {
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (f[0] != "e") throw ParseError(where + "unknown record '" + std::string(f[0]) + "'");
    if (f.size() != group.arity() + 2) {
      throw ParseError(where + "expected " + std::to_string(group.arity()) + " coordinates");
    }
    const long long e = to_integer(f[1], line_no);
    if (e < 0 || e >= edge_count) throw ParseError(where + "edge id out of range");
    if (seen[e]) throw ParseError(where + "edge " + std::to_string(e) + " labeled twice");
    std::vector<Residue> r;
    for (std::size_t i = 2; i < f.size(); ++i) {
      const long long c = to_integer(f[i], line_no);
      if (c < 0 || c >= group.modulus(i - 2)) throw ParseError(where + "coordinate out of range");
      r.push_back(c);
    }
    seen[e] = GroupElem{std::move(r)};
  });
  Labeling out{group, {}};
  for (int e = 0; e < edge_count; ++e) {
    if (!seen[e]) throw ParseError("edge " + std::to_string(e) + " has no label");
    out.labels.push_back(*seen[e]);
  }
  return out;
}

}  // namespace zsmagic
