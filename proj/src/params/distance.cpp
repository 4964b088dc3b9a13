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

#include <algorithm>

#include "ilm/error.hpp"
#include "ilm/params.hpp"

namespace ilm {
namespace {

// Level-synchronous BFS over packed rows.  Calls visit(v, depth) for every
// reached vertex and returns the deepest level.
template <class Visit>
std::size_t bfs_levels(const Graph& g, VertexId s, Visit&& visit) {
  const std::size_t w = g.words_per_row();
  std::vector<Word> seen(w, 0), frontier(w, 0), next(w, 0);
  bits::set(seen, s);
  bits::set(frontier, s);
  visit(s, 0);
  std::size_t depth = 0;
  for (;;) {
    std::fill(next.begin(), next.end(), 0);
    VertexSet(g.order(), frontier).for_each([&](VertexId u) {
      const auto r = g.row(u);
      for (std::size_t i = 0; i < w; ++i) next[i] |= r[i];
    });
    bool any = false;
    for (std::size_t i = 0; i < w; ++i) {
      next[i] &= ~seen[i];
      seen[i] |= next[i];
      any = any || next[i] != 0;
    }
    if (!any) return depth;
    ++depth;
    VertexSet(g.order(), next).for_each([&](VertexId v) { visit(v, depth); });
    frontier.swap(next);
  }
}

}  // namespace

std::vector<std::size_t> distances(const Graph& g, VertexId v) {
  if (v >= g.order()) throw UsageError("vertex out of range");
  std::vector<std::size_t> d(g.order(), kUnreachable);
  bfs_levels(g, v, [&](VertexId u, std::size_t k) { d[u] = k; });
  return d;
}

std::vector<std::size_t> eccentricities(const Graph& g) {
  std::vector<std::size_t> ecc(g.order(), 0);
  for (VertexId v = 0; v < g.order(); ++v) ecc[v] = bfs_levels(g, v, [](VertexId, std::size_t) {});
  return ecc;
}

DiameterRadius diameter_radius(const Graph& g) {
  DiameterRadius out;
  const Components comp = components(g);
  out.components = comp.count;
  out.component_diameters.assign(comp.count, 0);
  out.component_radii.assign(comp.count, kUnreachable);
  const auto ecc = eccentricities(g);
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto c = comp.label[v];
    out.component_diameters[c] = std::max(out.component_diameters[c], ecc[v]);
    out.component_radii[c] = std::min(out.component_radii[c], ecc[v]);
  }
  if (comp.count <= 1) {
    out.diameter = comp.count ? out.component_diameters[0] : 0;
    out.radius = comp.count ? out.component_radii[0] : 0;
  }
  return out;
}

}  // namespace ilm
