// Copyright 2026 The ILM Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ilm/graph.hpp"

namespace ilm {

// Edge-list text format:
//   n m
//   u v      (m lines, u < v, 0-based, sorted lexicographically)
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

/// JSON array of {"id", "kind", "parent", "step"}; originals have a null parent.
std::string to_lineage_json(const Graph& g);

/// Applies a lineage sidecar to a graph read from an edge list.
Graph with_lineage(const Graph& g, std::string_view lineage_json);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view contents);

/// Reads `p` as an edge list and, when `<p>.lineage.json` exists, attaches it.
Graph load_graph(const std::filesystem::path& p);

/// Writes the edge list to `p` and the lineage sidecar to `<p>.lineage.json`.
void save_graph(const Graph& g, const std::filesystem::path& p);

std::filesystem::path lineage_path(const std::filesystem::path& edge_list);

}  // namespace ilm
