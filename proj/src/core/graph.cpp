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

#include "ilm/graph.hpp"

#include <algorithm>
#include <string>

#include "ilm/error.hpp"

namespace ilm {

namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.order())
    throw UsageError("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(g.order()));
}

}  // namespace

GraphBuilder::GraphBuilder(std::size_t n)
    : n_(n), stride_(bits::words_for(n)), adj_(n * bits::words_for(n), 0), lineage_(n) {
  if (n > max_vertices())
    throw CapacityError("graph of order " + std::to_string(n) + " exceeds vertex cap " + std::to_string(max_vertices()));
  for (VertexId v = 0; v < n; ++v) lineage_[v] = Lineage{Origin::Original, v, 0};
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u >= n_ || v >= n_) throw UsageError("edge endpoint out of range");
  if (u == v) throw UsageError("self-loops are not allowed");
  bits::set(row_data(u), v);
  bits::set(row_data(v), u);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.stride_ = stride_;
  g.generation_ = generation_;
  g.adj_ = std::move(adj_);
  g.lineage_ = std::move(lineage_);
  g.degree_.resize(n_);
  std::size_t total = 0;
  for (VertexId v = 0; v < n_; ++v) {
    auto r = std::span<Word>(g.adj_.data() + std::size_t{v} * stride_, stride_);
    bits::mask_tail(r, n_);
    if (bits::test(r, v)) throw UsageError("adjacency has a loop at vertex " + std::to_string(v));
    g.degree_[v] = static_cast<std::uint32_t>(bits::popcount(r));
    total += g.degree_[v];
  }
  for (VertexId u = 0; u < n_; ++u) {
    VertexSet(n_, g.row(u)).for_each([&](VertexId v) {
      if (!g.adjacent(v, u)) throw UsageError("adjacency is not symmetric");
    });
  }
  for (VertexId v = 0; v < n_; ++v) {
    const Lineage& l = g.lineage_[v];
    if (l.origin != Origin::Original && l.parent >= v)
      throw UsageError("clone " + std::to_string(v) + " has a parent id that is not smaller");
  }
  g.m_ = total / 2;
  return g;
}

std::size_t Graph::min_degree() const {
  return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

std::size_t Graph::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

Graph Graph::induced_prefix(std::size_t k) const {
  if (k > n_) throw UsageError("prefix larger than graph");
  GraphBuilder b(k);
  for (VertexId v = 0; v < k; ++v) {
    auto dst = b.row_data(v);
    std::copy_n(row(v).begin(), dst.size(), dst.begin());
    b.set_lineage(v, lineage_[v]);
  }
  std::uint32_t gen = 0;
  for (VertexId v = 0; v < k; ++v) gen = std::max(gen, lineage_[v].step);
  b.set_generation(gen);
  return std::move(b).build();
}

Graph Graph::induced(std::span<const VertexId> ids) const {
  GraphBuilder b(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    check_vertex(*this, ids[i]);
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (adjacent(ids[i], ids[j])) b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  }
  return std::move(b).build();
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(m_);
  for (VertexId u = 0; u < n_; ++u) {
    VertexSet(n_, row(u)).for_each([&](VertexId v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::size_t degree(const Graph& g, VertexId v) {
  check_vertex(g, v);
  return g.degree(v);
}

VertexSet closed_neighborhood(const Graph& g, VertexId v) {
  check_vertex(g, v);
  VertexSet s = g.neighborhood(v);
  s.insert(v);
  return s;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (VertexId v = 0; v < n; ++v) {
    auto dst = b.row_data(v);
    auto src = g.row(v);
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = ~src[i];
    bits::mask_tail(dst, n);
    bits::reset(dst, v);
    b.set_lineage(v, g.lineage(v));
  }
  b.set_generation(g.generation());
  return std::move(b).build();
}

std::size_t volume(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw UsageError("vertex set does not match graph order");
  std::size_t vol = 0;
  s.for_each([&](VertexId v) { vol += g.degree(v); });
  return vol;
}

std::size_t edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.universe() != g.order() || y.universe() != g.order())
    throw UsageError("vertex set does not match graph order");
  std::size_t total = 0;
  x.for_each([&](VertexId v) { total += bits::popcount_and(g.row(v), y.words()); });
  return total;
}

Components components(const Graph& g) { return components(g, g.vertices()); }

Components components(const Graph& g, const VertexSet& alive) {
  const std::size_t n = g.order();
  Components c;
  c.label.assign(n, static_cast<std::uint32_t>(-1));
  VertexSet unseen = alive;
  for (VertexId s = unseen.first(); s != VertexSet::npos; s = unseen.first()) {
    const auto id = static_cast<std::uint32_t>(c.count++);
    unseen.erase(s);
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      c.label[v] = id;
      auto r = g.row(v);
      for (std::size_t w = 0; w < r.size(); ++w) {
        Word x = r[w] & unseen.words()[w];
        while (x != 0) {
          const auto u = static_cast<VertexId>(w * kWordBits + std::countr_zero(x));
          x &= x - 1;
          unseen.erase(u);
          stack.push_back(u);
        }
      }
    }
  }
  return c;
}

bool is_descendant(const Graph& g, VertexId v, VertexId ancestor) {
  check_vertex(g, v);
  while (true) {
    if (v == ancestor) return true;
    const Lineage& l = g.lineage(v);
    if (l.origin == Origin::Original) return false;
    v = l.parent;
  }
}

VertexId root_ancestor(const Graph& g, VertexId v) {
  check_vertex(g, v);
  while (g.lineage(v).origin != Origin::Original) v = g.lineage(v).parent;
  return v;
}

}  // namespace ilm
