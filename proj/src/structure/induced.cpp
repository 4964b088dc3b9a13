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
#include <numeric>
#include <set>

#include "ilm/error.hpp"
#include "ilm/structure.hpp"

namespace ilm {
namespace {

constexpr std::size_t kMaxPattern = 8;
constexpr std::size_t kMaxEnumerate = 6;

bool extend(const Graph& g, const Graph& p, std::vector<VertexId>& map) {
  const std::size_t i = map.size();
  if (i == p.order()) return true;
  VertexSet cand = g.vertices();
  for (std::size_t j = 0; j < i; ++j) {
    if (p.adjacent(static_cast<VertexId>(i), static_cast<VertexId>(j))) {
      cand &= g.neighborhood(map[j]);
    } else {
      cand -= g.neighborhood(map[j]);
      cand.erase(map[j]);
    }
  }
  const std::size_t need = p.degree(static_cast<VertexId>(i));
  for (VertexId h = cand.first(); h != VertexSet::npos; h = cand.next(h)) {
    if (g.degree(h) < need) continue;
    map.push_back(h);
    if (extend(g, p, map)) return true;
    map.pop_back();
  }
  return false;
}

std::string triangle_string(const Graph& g, const std::vector<VertexId>& perm) {
  const std::size_t n = g.order();
  std::string s;
  s.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
  return s;
}

Graph from_triangle(std::size_t n, const std::string& s) {
  GraphBuilder b(n);
  std::size_t k = 0;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (s[k++] == '1') b.add_edge(i, j);
  return std::move(b).build();
}

}  // namespace

std::optional<std::vector<VertexId>> induced_subgraph_search(const Graph& g, const Graph& pattern) {
  if (pattern.order() > kMaxPattern) throw UsageError("patterns are limited to 8 vertices");
  std::vector<VertexId> map;
  if (pattern.order() > g.order() || !extend(g, pattern, map)) return std::nullopt;
  return map;
}

bool verify_induced_embedding(const Graph& g, const Graph& pattern, const std::vector<VertexId>& map) {
  if (map.size() != pattern.order()) return false;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= g.order()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (map[i] == map[j]) return false;
      if (g.adjacent(map[i], map[j]) != pattern.adjacent(static_cast<VertexId>(i), static_cast<VertexId>(j)))
        return false;
    }
  }
  return true;
}

std::string canonical_form(const Graph& g) {
  if (g.order() > kMaxPattern) throw UsageError("canonical forms are limited to 8 vertices");
  std::vector<VertexId> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best = triangle_string(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, triangle_string(g, perm));
  return best;
}

std::vector<Graph> all_graphs_up_to_isomorphism(std::size_t l) {
  if (l > kMaxEnumerate) throw UsageError("enumeration is limited to 6 vertices");
  const std::size_t pairs = l * (l - (l > 0)) / 2;
  std::set<std::string> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::string s(pairs, '0');
    for (std::size_t k = 0; k < pairs; ++k)
      if (mask >> k & 1U) s[k] = '1';
    seen.insert(canonical_form(from_triangle(l, s)));
  }
  std::vector<Graph> out;
  for (const auto& s : seen) out.push_back(from_triangle(l, s));
  return out;
}

std::vector<std::pair<VertexId, VertexId>> paired_matching(std::size_t k) {
  if (k == 0 || k > 24) throw UsageError("paired matching needs 1 <= k <= 24");
  std::vector<std::pair<VertexId, VertexId>> m{{0, 1}};
  std::size_t n = 2;
  for (std::size_t step = 2; step <= k; ++step, n *= 2) {
    std::vector<std::pair<VertexId, VertexId>> next;
    next.reserve(2 * m.size());
    for (auto [x, y] : m) {
      next.emplace_back(x, static_cast<VertexId>(y + n));
      next.emplace_back(static_cast<VertexId>(x + n), y);
    }
    m = std::move(next);
  }
  return m;
}

}  // namespace ilm
