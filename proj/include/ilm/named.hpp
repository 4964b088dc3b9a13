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

#include <cstdint>
#include <string_view>

#include "ilm/graph.hpp"

namespace ilm {

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// K_{a,b}; a star when a == 1 (the center is vertex 0).
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

/// G(n, p) drawn from a seeded mt19937_64; identical seeds give identical graphs.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Parses names such as "K1", "K_3", "2K1", "C4", "P4", "K1,3", "K_{1,3}",
/// "E3" (edgeless), "Petersen", unions joined by '+' or 'u' ("K2+K3"), and
/// "G(n,p,seed)" for seeded random graphs.
Graph graph_from_name(std::string_view name);

}  // namespace ilm
