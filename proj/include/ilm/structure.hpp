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
#include <optional>
#include <string>
#include <vector>

#include "ilm/graph.hpp"

namespace ilm {

enum class HamiltonStatus { Hamiltonian, NonHamiltonian, Unknown };

enum class CertificateKind {
  Cut,         // components(G - A) > |A|
  Order,       // fewer than three vertices
  Exhaustive,  // complete search found no cycle
};

struct CutCertificate {
  CertificateKind kind = CertificateKind::Cut;
  std::vector<VertexId> cut;  // sorted
  std::size_t components = 0; // of G - cut
};

struct HamiltonResult {
  HamiltonStatus status = HamiltonStatus::Unknown;
  std::vector<VertexId> cycle;  // each vertex once; closing edge implied
  std::optional<CutCertificate> certificate;
  std::string method;           // which stage of the cascade decided
  std::uint64_t nodes = 0;

  std::string to_json() const;
};

struct HamiltonOptions {
  std::uint64_t budget = 20'000'000;  // search steps across the heuristic and exact stages
  std::size_t dp_max = 24;            // Held-Karp bitmask DP up to this order
  std::size_t pair_cut_max = 128;     // try all vertex pairs as cuts up to this order
  std::uint64_t seed = 0x5eed;
  bool use_lineage = true;
};

/// Cascade: trivial certificates, Dirac/Ore construction, lineage-driven
/// construction for ILM graphs, rotation-extension, cut search, exact search.
/// Every cycle and cut is re-verified before it is returned.
HamiltonResult hamiltonian(const Graph& g, const HamiltonOptions& opt = {});

/// Independent checkers.
bool verify_cycle(const Graph& g, const std::vector<VertexId>& cycle);
bool verify_cut(const Graph& g, const CutCertificate& c);

/// Cycle through all vertices when min over nonadjacent pairs of
/// deg u + deg v is at least n (Ore), by Palmer's gap-closing rotations.
std::optional<std::vector<VertexId>> ore_cycle(const Graph& g);

/// Hamiltonian cycle of LT(G) from one of G: v1 v1' v2 v2' ...
std::vector<VertexId> double_cycle(const std::vector<VertexId>& cycle, std::size_t n);

struct EdgeSwitch {
  VertexId a = 0, b = 0;  // edge ab on the first cycle
  VertexId c = 0, d = 0;  // edge cd on the second cycle; ac and bd are edges
  std::vector<VertexId> merged;
};

/// Finds edges ab on c1 and cd on c2 with ac, bd in E (either orientation
/// of cd) and splices the two cycles.  UsageError unless c1 and c2 are
/// vertex-disjoint cycles of g.
std::optional<EdgeSwitch> find_edge_switch(const Graph& g, const std::vector<VertexId>& c1,
                                           const std::vector<VertexId>& c2);

/// Hamiltonian cycle of the complement of LT/LAT(H) starting from one of the
/// complement of H, arranged so the first four vertices are new clones.
std::optional<std::vector<VertexId>> complement_cycle_with_window(const Graph& next,
                                                                  const std::vector<VertexId>& prev_cycle);

/// Two cycles in LAT(H) built from a complement cycle of H:
/// v1 v2* v3 v4* ... and v1* v2 v3* v4 ...  When |H| is odd they coincide
/// and a single Hamiltonian cycle is returned in `first`.
struct CyclePair {
  std::vector<VertexId> first;
  std::vector<VertexId> second;
};
CyclePair lat_cycle_pair(const std::vector<VertexId>& complement_cycle, std::size_t n);

struct ZetaRow {
  std::size_t t = 0;
  std::size_t order = 0;
  HamiltonStatus status = HamiltonStatus::Unknown;
  std::optional<CutCertificate> center_cut;  // descendants of the center when 2^t < n - 1
  std::string method;
};

struct ZetaExperiment {
  std::size_t n = 0;
  std::vector<ZetaRow> rows;  // t = 0..t_max
  std::optional<std::size_t> first_hamiltonian;
  bool monotone = true;  // no non-Hamiltonian row after a Hamiltonian one
};

ZetaExperiment zeta_star_experiment(std::size_t n, std::size_t t_max, const HamiltonOptions& opt = {});

/// Paired matching M_k of ILT_k(K1): M_1 = {01}, M_k = {x y', x' y : xy in M_{k-1}}.
std::vector<std::pair<VertexId, VertexId>> paired_matching(std::size_t k);

/// Induced copy of `pattern` (at most 8 vertices) in g: map[i] is the host
/// vertex of pattern vertex i.  Lexicographically smallest map.
std::optional<std::vector<VertexId>> induced_subgraph_search(const Graph& g, const Graph& pattern);

bool verify_induced_embedding(const Graph& g, const Graph& pattern, const std::vector<VertexId>& map);

/// One representative per isomorphism class of graphs on l <= 6 vertices,
/// each in canonical (minimum upper-triangle string) form.
std::vector<Graph> all_graphs_up_to_isomorphism(std::size_t l);

/// Upper-triangle adjacency string minimised over all relabellings.
std::string canonical_form(const Graph& g);

std::string to_string(HamiltonStatus s);

}  // namespace ilm
