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

// Test-only reference implementations.  Everything here works on a plain
// vector<vector<bool>> adjacency matrix and follows the textbook definitions
// literally, so it shares no code path with the library under test.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "ilm/graph.hpp"

namespace oracle {

struct Naive {
  std::size_t n = 0;
  std::vector<std::vector<bool>> a;

  explicit Naive(std::size_t k = 0) : n(k), a(k, std::vector<bool>(k, false)) {}
  void add(std::size_t u, std::size_t v) { a[u][v] = a[v][u] = true; }
  std::size_t deg(std::size_t v) const { return static_cast<std::size_t>(std::count(a[v].begin(), a[v].end(), true)); }
  std::size_t edges() const {
    std::size_t m = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) m += a[u][v];
    return m;
  }
};

inline Naive from(const ilm::Graph& g) {
  Naive o(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v)
      if (u != v && g.adjacent(static_cast<ilm::VertexId>(u), static_cast<ilm::VertexId>(v))) o.a[u][v] = true;
  return o;
}

inline bool same(const Naive& o, const ilm::Graph& g) {
  if (o.n != g.order()) return false;
  for (std::size_t u = 0; u < o.n; ++u)
    for (std::size_t v = 0; v < o.n; ++v)
      if (o.a[u][v] != (u != v && g.adjacent(static_cast<ilm::VertexId>(u), static_cast<ilm::VertexId>(v))))
        return false;
  return true;
}

/// Clone x' of x gets index n + x and N(x') = N[x].
inline Naive lt(const Naive& g) {
  Naive o(2 * g.n);
  for (std::size_t u = 0; u < g.n; ++u)
    for (std::size_t v = 0; v < g.n; ++v)
      if (g.a[u][v]) o.add(u, v);
  for (std::size_t x = 0; x < g.n; ++x) {
    o.add(g.n + x, x);
    for (std::size_t y = 0; y < g.n; ++y)
      if (g.a[x][y]) o.add(g.n + x, y);
  }
  return o;
}

/// Anti-clone x* of x gets index n + x and N(x*) = V \ N[x].
inline Naive lat(const Naive& g) {
  Naive o(2 * g.n);
  for (std::size_t u = 0; u < g.n; ++u)
    for (std::size_t v = 0; v < g.n; ++v)
      if (g.a[u][v]) o.add(u, v);
  for (std::size_t x = 0; x < g.n; ++x)
    for (std::size_t y = 0; y < g.n; ++y)
      if (y != x && !g.a[x][y]) o.add(g.n + x, y);
  return o;
}

inline constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

inline std::vector<std::size_t> bfs(const Naive& g, std::size_t s) {
  std::vector<std::size_t> d(g.n, kInf);
  std::queue<std::size_t> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (std::size_t v = 0; v < g.n; ++v)
      if (g.a[u][v] && d[v] == kInf) {
        d[v] = d[u] + 1;
        q.push(v);
      }
  }
  return d;
}

/// Local clustering as (numerator, denominator) using edges among neighbours.
inline std::pair<std::uint64_t, std::uint64_t> clustering(const Naive& g, std::size_t v) {
  std::vector<std::size_t> nb;
  for (std::size_t u = 0; u < g.n; ++u)
    if (g.a[v][u]) nb.push_back(u);
  std::uint64_t links = 0;
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) links += g.a[nb[i]][nb[j]];
  const std::uint64_t d = nb.size();
  return {links, d * (d - 1) / 2};
}

/// Chromatic number by trying k = 1, 2, ... with plain backtracking in index
/// order.  Only meant for small graphs.
inline std::size_t chromatic(const Naive& g) {
  if (g.n == 0) return 0;
  std::vector<int> col(g.n, -1);
  for (int k = 1;; ++k) {
    auto rec = [&](auto&& self, std::size_t v) -> bool {
      if (v == g.n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u) ok = !(g.a[u][v] && col[u] == c);
        if (!ok) continue;
        col[v] = c;
        if (self(self, v + 1)) return true;
      }
      col[v] = -1;
      return false;
    };
    if (rec(rec, 0)) return static_cast<std::size_t>(k);
  }
}

/// Domination number by enumerating subsets in order of size.
inline std::size_t domination(const Naive& g) {
  for (std::size_t k = 1; k <= g.n; ++k) {
    std::vector<bool> pick(g.n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      bool all = true;
      for (std::size_t v = 0; v < g.n && all; ++v) {
        bool hit = pick[v];
        for (std::size_t u = 0; u < g.n && !hit; ++u) hit = pick[u] && g.a[u][v];
        all = hit;
      }
      if (all) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return g.n;
}

/// Hamiltonicity by exhaustive search from vertex 0.
inline bool hamiltonian(const Naive& g) {
  if (g.n < 3) return false;
  std::vector<bool> used(g.n, false);
  used[0] = true;
  auto rec = [&](auto&& self, std::size_t v, std::size_t depth) -> bool {
    if (depth == g.n) return g.a[v][0];
    for (std::size_t u = 1; u < g.n; ++u)
      if (!used[u] && g.a[v][u]) {
        used[u] = true;
        if (self(self, u, depth + 1)) return true;
        used[u] = false;
      }
    return false;
  };
  return rec(rec, 0, 1);
}

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        const double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = m[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline std::vector<std::vector<double>> normalized_laplacian(const Naive& g) {
  std::vector<std::vector<double>> l(g.n, std::vector<double>(g.n, 0.0));
  for (std::size_t u = 0; u < g.n; ++u) {
    if (g.deg(u) > 0) l[u][u] = 1;
    for (std::size_t v = 0; v < g.n; ++v)
      if (g.a[u][v]) l[u][v] = -1.0 / std::sqrt(double(g.deg(u)) * double(g.deg(v)));
  }
  return l;
}

/// True when `pattern` occurs as an induced subgraph of `host`, by trying
/// every injective map (pattern must be tiny).
inline bool induced_contains(const Naive& host, const Naive& pattern) {
  std::vector<std::size_t> map(pattern.n);
  std::vector<bool> used(host.n, false);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == pattern.n) return true;
    for (std::size_t h = 0; h < host.n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = host.a[map[j]][h] == pattern.a[j][i];
      if (!ok) continue;
      used[h] = true;
      map[i] = h;
      if (self(self, i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

inline Naive random(std::size_t n, double p, std::mt19937_64& rng) {
  Naive g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add(u, v);
  return g;
}

inline ilm::Graph to_graph(const Naive& o) {
  ilm::GraphBuilder b(o.n);
  for (std::size_t u = 0; u < o.n; ++u)
    for (std::size_t v = u + 1; v < o.n; ++v)
      if (o.a[u][v]) b.add_edge(static_cast<ilm::VertexId>(u), static_cast<ilm::VertexId>(v));
  return std::move(b).build();
}

}  // namespace oracle
