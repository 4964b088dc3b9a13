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

// Cycle constructions: Palmer's algorithm, LT doubling, the complement
// window cycle, the LAT cycle pair and edge switches.

#include <algorithm>

#include "ilm/error.hpp"
#include "ilm/structure.hpp"

namespace ilm {
namespace {

bool is_cycle_in(const Graph& g, const std::vector<VertexId>& c, std::vector<char>& seen) {
  if (c.size() < 3) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const VertexId v = c[i];
    if (v >= g.order() || seen[v]) return false;
    seen[v] = 1;
    if (!g.adjacent(v, c[(i + 1) % c.size()])) return false;
  }
  return true;
}

}  // namespace

bool verify_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
  if (cycle.size() != g.order()) return false;
  std::vector<char> seen(g.order(), 0);
  return is_cycle_in(g, cycle, seen);
}

std::optional<std::vector<VertexId>> ore_cycle(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && g.degree(u) + g.degree(v) < n) return std::nullopt;
  std::vector<VertexId> c(n);
  for (VertexId v = 0; v < n; ++v) c[v] = v;
  // Every pass removes at least one gap, so n passes suffice.
  for (std::size_t pass = 0; pass <= n; ++pass) {
    std::size_t gap = n;
    for (std::size_t i = 0; i < n && gap == n; ++i)
      if (!g.adjacent(c[i], c[(i + 1) % n])) gap = i;
    if (gap == n) return c;
    std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(gap), c.end());
    // Gap now sits between c[0] and c[1].
    std::size_t j = 0;
    for (std::size_t k = 2; k + 1 < n && j == 0; ++k)
      if (g.adjacent(c[0], c[k]) && g.adjacent(c[1], c[k + 1])) j = k;
    if (j == 0) return std::nullopt;
    std::reverse(c.begin() + 1, c.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  }
  return std::nullopt;
}

std::vector<VertexId> double_cycle(const std::vector<VertexId>& cycle, std::size_t n) {
  std::vector<VertexId> out;
  out.reserve(2 * cycle.size());
  for (VertexId v : cycle) {
    out.push_back(v);
    out.push_back(static_cast<VertexId>(v + n));
  }
  return out;
}

std::optional<std::vector<VertexId>> complement_cycle_with_window(const Graph& next,
                                                                  const std::vector<VertexId>& prev_cycle) {
  const std::size_t n = prev_cycle.size();
  if (n < 4 || next.order() != 2 * n) return std::nullopt;
  const VertexId u = prev_cycle.front(), v = prev_cycle.back();
  // Enter the clone block from v and leave it towards u; clones are pairwise
  // non-adjacent in `next`, so any order inside the block works.
  std::optional<VertexId> in, out;
  for (VertexId x = 0; x < n && !in; ++x)
    if (!next.adjacent(v, static_cast<VertexId>(n + x))) in = static_cast<VertexId>(n + x);
  for (VertexId x = 0; x < n && !out; ++x) {
    const auto c = static_cast<VertexId>(n + x);
    if (c != in && !next.adjacent(u, c)) out = c;
  }
  if (!in || !out) return std::nullopt;
  std::vector<VertexId> block{*in};
  for (VertexId x = 0; x < n; ++x) {
    const auto c = static_cast<VertexId>(n + x);
    if (c != *in && c != *out) block.push_back(c);
  }
  block.push_back(*out);
  std::vector<VertexId> cycle(block);
  cycle.insert(cycle.end(), prev_cycle.begin(), prev_cycle.end());
  return cycle;
}

CyclePair lat_cycle_pair(const std::vector<VertexId>& c, std::size_t n) {
  const std::size_t len = c.size();
  auto star = [&](VertexId v) { return static_cast<VertexId>(v + n); };
  CyclePair p;
  // Walk v1 v2* v3 v4* ...; for odd length the walk covers both colour
  // classes before it closes.
  const std::size_t walk = len % 2 == 0 ? len : 2 * len;
  for (std::size_t i = 0; i < walk; ++i) p.first.push_back(i % 2 == 0 ? c[i % len] : star(c[i % len]));
  if (len % 2 == 0)
    for (std::size_t i = 0; i < len; ++i) p.second.push_back(i % 2 == 0 ? star(c[i]) : c[i]);
  return p;
}

std::optional<EdgeSwitch> find_edge_switch(const Graph& g, const std::vector<VertexId>& c1,
                                           const std::vector<VertexId>& c2) {
  std::vector<char> seen(g.order(), 0);
  if (!is_cycle_in(g, c1, seen) || !is_cycle_in(g, c2, seen))
    throw UsageError("edge switch needs two vertex-disjoint cycles of the graph");
  const std::size_t p = c1.size(), q = c2.size();
  for (std::size_t i = 0; i < p; ++i) {
    const VertexId a = c1[i], b = c1[(i + 1) % p];
    for (std::size_t j = 0; j < q; ++j) {
      for (int flip = 0; flip < 2; ++flip) {
        // Edge cd of c2 in either direction, with ac and bd present.
        const std::size_t jc = flip ? (j + 1) % q : j, jd = flip ? j : (j + 1) % q;
        const VertexId c = c2[jc], d = c2[jd];
        if (!g.adjacent(a, c) || !g.adjacent(b, d)) continue;
        EdgeSwitch s{a, b, c, d, {}};
        // b ... a along c1 (dropping ab), then c ... d along c2 (dropping cd).
        for (std::size_t k = 0; k < p; ++k) s.merged.push_back(c1[(i + 1 + k) % p]);
        for (std::size_t k = 0; k < q; ++k) {
          const std::size_t idx = flip ? (jc + k) % q : (jc + q - k) % q;
          s.merged.push_back(c2[idx]);
        }
        return s;
      }
    }
  }
  return std::nullopt;
}

}  // namespace ilm
