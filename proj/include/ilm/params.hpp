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
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ilm/graph.hpp"
#include "ilm/sequence.hpp"

namespace ilm {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// BFS distances from v; kUnreachable marks other components.
std::vector<std::size_t> distances(const Graph& g, VertexId v);

/// Eccentricity of every vertex inside its own component.
std::vector<std::size_t> eccentricities(const Graph& g);

struct DiameterRadius {
  std::optional<std::size_t> diameter;  // empty means infinite (disconnected)
  std::optional<std::size_t> radius;    // empty when disconnected
  std::size_t components = 0;
  std::vector<std::size_t> component_diameters;  // ordered by smallest member
  std::vector<std::size_t> component_radii;
};
DiameterRadius diameter_radius(const Graph& g);

inline constexpr std::uint64_t kDefaultColoringBudget = 10'000'000;

struct ChromaticResult {
  bool exact = false;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
  bool theorem_bounds = false;  // lineage bracket tightened [lower, upper]
  std::vector<std::uint32_t> coloring;  // a proper coloring with `upper` colors

  std::size_t value() const { return exact ? lower : upper; }
};

/// Exact chromatic number by DSATUR branch and bound.  When the node budget
/// runs out the result degrades to [lower, upper].  With `lineage_bounds`, a
/// graph carrying lineage from an ILM run also gets the bracket
/// [chi0 + t - 1, chi0 + t] folded in after the search gives up.
ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget = kDefaultColoringBudget,
                                 bool lineage_bounds = false);

/// A clique found greedily (its size bounds chi and omega from below).
std::vector<VertexId> greedy_clique(const Graph& g);

bool is_proper_coloring(const Graph& g, const std::vector<std::uint32_t>& colors);

struct DominationResult {
  std::size_t gamma = 0;
  std::vector<VertexId> witness;  // lexicographically smallest of size gamma
  bool exact = true;
};

inline constexpr std::uint64_t kDefaultDominationBudget = 50'000'000;

/// Minimum dominating set.  Sizes up to `cap` use the pair/triple scans; larger
/// values fall back to a lexicographic search bounded by `budget` nodes, after
/// which the best set found is reported with exact = false.
DominationResult domination_number(const Graph& g, std::size_t cap = 3,
                                   std::uint64_t budget = kDefaultDominationBudget);

bool is_dominating_set(const Graph& g, const std::vector<VertexId>& d);

/// Lexicographically smallest (u, v), u < v, with N[u] and N[v] partitioning V.
std::optional<std::pair<VertexId, VertexId>> find_partition_pair(const Graph& g);

std::optional<VertexId> dominating_vertex(const Graph& g);
std::optional<VertexId> isolated_vertex(const Graph& g);

/// True when G is the disjoint union of exactly two complete graphs.
bool is_two_clique_union(const Graph& g);

/// Right-hand side of the LAT disconnection criterion: G has a dominating
/// vertex or is the disjoint union of two cliques.
bool lat_connectivity_predicate(const Graph& g);

struct DominationClass {
  bool predicts_two = false;
  std::vector<int> conditions;  // every branch (1, 2, 3) that holds
  bool recorded_only = false;   // t == tau1 + 1 with the third branch's other hypotheses
};

/// Predicts whether gamma(ILM_t(S, g0)) is 2 (otherwise 3).  Requires a zero
/// in S and t >= tau1 + 1.
DominationClass classify_domination_2(const Graph& g0, const SequenceSpec& s, std::size_t t);

struct ParameterReport {
  DiameterRadius distance;
  ChromaticResult chromatic;
  DominationResult domination;
  std::optional<std::pair<VertexId, VertexId>> partition_pair;
  std::optional<VertexId> dominating;

  std::string to_json() const;
};

struct ParameterOptions {
  std::uint64_t coloring_budget = kDefaultColoringBudget;
  std::uint64_t domination_budget = kDefaultDominationBudget;
  std::size_t domination_cap = 3;
};

ParameterReport parameter_report(const Graph& g, const ParameterOptions& opt = {});

}  // namespace ilm
