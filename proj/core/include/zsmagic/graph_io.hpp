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

#ifndef ZSMAGIC_GRAPH_IO_HPP_
#define ZSMAGIC_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "zsmagic/labeling.hpp"
#include "zsmagic/multigraph.hpp"

namespace zsmagic {

/// Parses the edge-list format:
///
///   # comment
///   n <vertex_count>
///   e <u> <v>          (0-based, repeated lines give parallel edges)
///
/// Edge ids are positions in the `e` line order. Throws ParseError.
Multigraph parse_graph(std::string_view text);

Multigraph read_graph_file(const std::filesystem::path& path);

std::string format_graph(const Multigraph& g);

/// Graphviz rendering; edge labels are drawn as tuples when `labels` is given.
std::string to_dot(const Multigraph& g, const Labeling* labels = nullptr);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace zsmagic

#endif  // ZSMAGIC_GRAPH_IO_HPP_
