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

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ilm/vertex_set.hpp"

namespace ilm {

enum class Origin : std::uint8_t { Original, TransitiveClone, AntiClone };

/// Where a vertex came from.  Originals carry their index in the initial
/// graph as `parent` and step 0; clones carry the id of the vertex they were
/// copied from and the generation of the graph they first appear in.
struct Lineage {
  Origin origin = Origin::Original;
  VertexId parent = 0;
  std::uint32_t step = 0;

  friend bool operator==(const Lineage&, const Lineage&) = default;
};

class GraphBuilder;

/// Immutable simple undirected graph backed by a row-major packed bit matrix.
///
/// Rows are padded to whole 64-bit words; padding bits are always zero.  The
/// value is cheap to share across threads once built.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }
  std::uint32_t generation() const { return generation_; }
  std::size_t words_per_row() const { return stride_; }

  bool adjacent(VertexId u, VertexId v) const { return bits::test(row(u), v); }
  std::size_t degree(VertexId v) const { return degree_[v]; }
  std::span<const Word> row(VertexId v) const { return {adj_.data() + std::size_t{v} * stride_, stride_}; }

  VertexSet neighborhood(VertexId v) const { return VertexSet(n_, row(v)); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  std::size_t min_degree() const;
  std::size_t max_degree() const;

  const Lineage& lineage(VertexId v) const { return lineage_[v]; }
  std::span<const Lineage> lineage() const { return lineage_; }

  /// Subgraph induced on ids 0..k-1, lineage and adjacency preserved.  For an
  /// ILM graph with k = n_{t-1} this is exactly ILM_{t-1}.
  Graph induced_prefix(std::size_t k) const;

  /// Subgraph induced on the given ids (relabelled 0..|ids|-1 in order).
  Graph induced(std::span<const VertexId> ids) const;

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  /// Adjacency equality; lineage and generation are ignored.
  bool same_adjacency(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::size_t m_ = 0;
  std::uint32_t generation_ = 0;
  std::vector<Word> adj_;
  std::vector<std::uint32_t> degree_;
  std::vector<Lineage> lineage_;
};

/// Mutable staging area for a Graph.  `build()` validates symmetry and an
/// empty diagonal, then freezes the result.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return stride_; }

  void add_edge(VertexId u, VertexId v);
  void set_lineage(VertexId v, Lineage l) { lineage_[v] = l; }
  void set_generation(std::uint32_t g) { generation_ = g; }

  /// Raw row storage for bulk construction.  Callers must keep the matrix
  /// symmetric; build() rejects anything else.
  std::span<Word> row_data(VertexId v) { return {adj_.data() + std::size_t{v} * stride_, stride_}; }

  Graph build() &&;

 private:
  std::size_t n_;
  std::size_t stride_;
  std::uint32_t generation_ = 0;
  std::vector<Word> adj_;
  std::vector<Lineage> lineage_;
};

// Free-function surface used throughout the library.

std::size_t degree(const Graph& g, VertexId v);
VertexSet closed_neighborhood(const Graph& g, VertexId v);
Graph complement(const Graph& g);

/// Sum of degrees over `s`.
std::size_t volume(const Graph& g, const VertexSet& s);
inline std::size_t volume(const Graph& g) { return 2 * g.size(); }

/// e(X, Y): number of (x, y) with x in X, y in Y, xy an edge.  Edges inside
/// X and Y count twice, so edges_between(g, X, X) == 2 |E(X)|.
std::size_t edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Connected components as a label per vertex (labels 0..k-1 in order of
/// smallest member) plus the component count.
struct Components {
  std::vector<std::uint32_t> label;
  std::size_t count = 0;
};
Components components(const Graph& g);
Components components(const Graph& g, const VertexSet& alive);

/// Descendant of `ancestor` under the lineage relation (a vertex is its own
/// descendant).
bool is_descendant(const Graph& g, VertexId v, VertexId ancestor);

/// The vertex of the initial graph that `v` descends from.
VertexId root_ancestor(const Graph& g, VertexId v);

}  // namespace ilm
