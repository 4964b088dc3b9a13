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
#include <random>

#include "json.hpp"
#include "ilm/engine.hpp"
#include "ilm/structure.hpp"

namespace ilm {
namespace {

HamiltonResult found(std::vector<VertexId> cycle, std::string method) {
  HamiltonResult r;
  r.status = HamiltonStatus::Hamiltonian;
  r.cycle = std::move(cycle);
  r.method = std::move(method);
  return r;
}

HamiltonResult refuted(CutCertificate c, std::string method) {
  HamiltonResult r;
  r.status = HamiltonStatus::NonHamiltonian;
  r.certificate = std::move(c);
  r.method = std::move(method);
  return r;
}

std::size_t components_without(const Graph& g, const VertexSet& cut) {
  return components(g, g.vertices() - cut).count;
}

// Step bits recovered from lineage, when the graph is an intact ILM run.
std::optional<std::vector<int>> lineage_bits(const Graph& g) {
  const std::size_t t = g.generation();
  if (t == 0 || t >= 32 || (g.order() >> t) << t != g.order() || (g.order() >> t) == 0) return std::nullopt;
  std::vector<int> bits;
  std::size_t n = g.order() >> t;
  for (std::size_t k = 1; k <= t; ++k, n *= 2) {
    const Origin o = g.lineage(static_cast<VertexId>(n)).origin;
    if (o == Origin::Original) return std::nullopt;
    for (std::size_t x = 0; x < n; ++x) {
      const Lineage& l = g.lineage(static_cast<VertexId>(n + x));
      if (l.origin != o || l.parent != x || l.step != k) return std::nullopt;
    }
    bits.push_back(o == Origin::TransitiveClone ? 1 : 0);
  }
  return bits;
}

std::optional<CutCertificate> cut_search(const Graph& g, const HamiltonOptions& opt) {
  const std::size_t n = g.order();
  auto attempt = [&](const VertexSet& a) -> std::optional<CutCertificate> {
    const std::size_t k = components_without(g, a);
    if (k > std::max<std::size_t>(a.count(), 1)) return CutCertificate{CertificateKind::Cut, a.to_vector(), k};
    return std::nullopt;
  };
  if (auto c = attempt(VertexSet(n))) return c;
  for (VertexId v = 0; v < n; ++v)
    if (auto c = attempt(VertexSet(n, {v}))) return c;
  // Descendant classes of each original vertex.
  if (g.generation() > 0) {
    std::vector<VertexSet> classes;
    for (VertexId v = 0; v < n; ++v) {
      const VertexId r = root_ancestor(g, v);
      if (r >= classes.size()) classes.resize(r + 1, VertexSet(n));
      classes[r].insert(v);
    }
    for (const auto& a : classes)
      if (auto c = attempt(a)) return c;
  }
  // V minus a greedy independent set: the set's members become singletons.
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      return pass == 0 ? g.degree(a) < g.degree(b) : g.degree(a) > g.degree(b);
    });
    VertexSet indep(n), blocked(n);
    for (VertexId v : order) {
      if (blocked.contains(v)) continue;
      indep.insert(v);
      blocked.insert(v);
      blocked |= g.neighborhood(v);
    }
    if (auto c = attempt(indep.complement())) return c;
  }
  if (n <= opt.pair_cut_max)
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (auto c = attempt(VertexSet(n, {u, v}))) return c;
  return std::nullopt;
}

// Pósa rotation-extension with random restarts.
std::optional<std::vector<VertexId>> rotation_extension(const Graph& g, std::uint64_t& budget, std::uint64_t seed) {
  const std::size_t n = g.order();
  std::mt19937_64 rng(seed);
  const std::size_t w = g.words_per_row();
  std::vector<Word> visited(w);
  std::vector<VertexId> path;
  const std::uint64_t per_restart = std::max<std::uint64_t>(1000, 20 * n * n);
  while (budget > 0) {
    std::fill(visited.begin(), visited.end(), 0);
    path.assign(1, static_cast<VertexId>(rng() % n));
    bits::set(visited, path[0]);
    for (std::uint64_t step = 0; step < per_restart && budget > 0; ++step, --budget) {
      const VertexId end = path.back();
      const auto row = g.row(end);
      // Extend with an unvisited neighbour, scanning from a random word.
      const std::size_t start = rng() % w;
      VertexId next = VertexSet::npos;
      for (std::size_t k = 0; k < w && next == VertexSet::npos; ++k) {
        const std::size_t i = (start + k) % w;
        const Word x = row[i] & ~visited[i];
        if (x) next = static_cast<VertexId>(i * kWordBits + std::countr_zero(x));
      }
      if (next != VertexSet::npos) {
        path.push_back(next);
        bits::set(visited, next);
        continue;
      }
      if (path.size() == n && g.adjacent(end, path[0])) return path;
      // Rotate: pick a neighbour path[i] of the end and reverse the tail
      // after it, making path[i + 1] the new end.
      std::vector<std::size_t> pivots;
      for (std::size_t i = 0; i + 2 < path.size(); ++i)
        if (g.adjacent(end, path[i])) pivots.push_back(i);
      if (pivots.empty()) {
        std::reverse(path.begin(), path.end());
        continue;
      }
      const std::size_t i = pivots[rng() % pivots.size()];
      std::reverse(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
      if (rng() % 8 == 0) std::reverse(path.begin(), path.end());
    }
  }
  return std::nullopt;
}

// Held-Karp over subsets containing vertex 0.  Returns nullopt when the
// budget runs out, an empty vector when there is provably no cycle.
std::optional<std::vector<VertexId>> held_karp(const Graph& g, std::uint64_t& budget) {
  const std::size_t n = g.order();
  const std::size_t m = n - 1;  // vertices 1..n-1 map to bits 0..m-1
  std::vector<std::uint32_t> adj(n, 0);
  for (VertexId v = 1; v < n; ++v)
    for (VertexId u = 1; u < n; ++u)
      if (g.adjacent(v, u)) adj[v] |= std::uint32_t{1} << (u - 1);
  std::vector<std::uint32_t> dp(std::size_t{1} << m, 0);
  for (VertexId v = 1; v < n; ++v)
    if (g.adjacent(0, v)) dp[std::size_t{1} << (v - 1)] |= std::uint32_t{1} << (v - 1);
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    std::uint32_t ends = dp[mask];
    while (ends) {
      if (budget == 0) return std::nullopt;
      --budget;
      const unsigned b = static_cast<unsigned>(std::countr_zero(ends));
      ends &= ends - 1;
      std::uint32_t nxt = adj[b + 1] & ~static_cast<std::uint32_t>(mask);
      while (nxt) {
        const unsigned c = static_cast<unsigned>(std::countr_zero(nxt));
        nxt &= nxt - 1;
        dp[mask | (std::size_t{1} << c)] |= std::uint32_t{1} << c;
      }
    }
  }
  const std::size_t full = dp.size() - 1;
  std::optional<unsigned> last;
  for (unsigned b = 0; b < m && !last; ++b)
    if ((dp[full] >> b & 1U) && g.adjacent(0, static_cast<VertexId>(b + 1))) last = b;
  if (!last) return std::vector<VertexId>{};
  std::vector<VertexId> cycle;
  std::size_t mask = full;
  unsigned cur = *last;
  while (true) {
    cycle.push_back(static_cast<VertexId>(cur + 1));
    const std::size_t rest = mask & ~(std::size_t{1} << cur);
    if (rest == 0) break;
    unsigned prev = 0;
    for (std::uint32_t cand = dp[rest]; cand; cand &= cand - 1) {
      prev = static_cast<unsigned>(std::countr_zero(cand));
      if (adj[prev + 1] >> cur & 1U) break;
    }
    mask = rest;
    cur = prev;
  }
  cycle.push_back(0);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

// Depth-first search from vertex 0 with fewest-options-first ordering.
struct Backtrack {
  const Graph& g;
  std::uint64_t& budget;
  std::vector<char> used;
  std::vector<VertexId> path;
  bool out_of_budget = false;

  bool run() {
    const std::size_t n = g.order();
    if (path.size() == n) return g.adjacent(path.back(), path[0]);
    if (budget == 0) {
      out_of_budget = true;
      return false;
    }
    --budget;
    std::vector<std::pair<std::size_t, VertexId>> cand;
    g.neighborhood(path.back()).for_each([&](VertexId u) {
      if (used[u]) return;
      std::size_t free = 0;
      g.neighborhood(u).for_each([&](VertexId x) { free += !used[x]; });
      cand.emplace_back(free, u);
    });
    std::sort(cand.begin(), cand.end());
    for (auto [free, u] : cand) {
      used[u] = 1;
      path.push_back(u);
      if (run()) return true;
      path.pop_back();
      used[u] = 0;
      if (out_of_budget) return false;
    }
    return false;
  }
};

HamiltonResult cascade(const Graph& g, const HamiltonOptions& opt, std::uint64_t& budget);

// Constructions that follow the ILM history recorded in the lineage.
std::optional<std::vector<VertexId>> lineage_route(const Graph& g, const HamiltonOptions& opt,
                                                   std::uint64_t& budget, std::string& how) {
  const auto bits = lineage_bits(g);
  if (!bits) return std::nullopt;
  const std::size_t t = bits->size();
  const std::size_t half = g.order() / 2;
  if (bits->back() == 1) {
    const HamiltonResult prev = cascade(g.induced_prefix(half), opt, budget);
    if (prev.status != HamiltonStatus::Hamiltonian) return std::nullopt;
    how = "lineage-doubling(" + prev.method + ")";
    return double_cycle(prev.cycle, half);
  }
  // Last step anti-transitive: needs an earlier zero at index <= t - 3 so the
  // complement two steps back satisfies Dirac, and at least two originals.
  const auto first_zero = std::find(bits->begin(), bits->end(), 0) - bits->begin();
  if (static_cast<std::size_t>(first_zero) + 3 > t || (g.order() >> t) < 2) return std::nullopt;
  const Graph h1 = g.induced_prefix(half);
  const Graph h2 = g.induced_prefix(half / 2);
  const auto base = ore_cycle(complement(h2));
  if (!base) return std::nullopt;
  const auto window = complement_cycle_with_window(h1, *base);
  if (!window || !verify_cycle(complement(h1), *window)) return std::nullopt;
  const CyclePair pair = lat_cycle_pair(*window, half);
  if (pair.second.empty()) {
    how = "lineage-lat";
    return pair.first;
  }
  const auto sw = find_edge_switch(g, pair.first, pair.second);
  if (!sw) return std::nullopt;
  how = "lineage-edge-switch";
  return sw->merged;
}

HamiltonResult cascade(const Graph& g, const HamiltonOptions& opt, std::uint64_t& budget) {
  const std::size_t n = g.order();
  if (n < 3) return refuted({CertificateKind::Order, {}, components(g).count}, "order");
  if (components(g).count > 1) return refuted({CertificateKind::Cut, {}, components(g).count}, "disconnected");
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) == 1) {
      const VertexId u = g.neighborhood(v).first();
      return refuted({CertificateKind::Cut, {u}, components_without(g, VertexSet(n, {u}))}, "pendant");
    }
  if (auto c = ore_cycle(g)) return found(*c, "ore");
  if (opt.use_lineage) {
    std::string how;
    if (auto c = lineage_route(g, opt, budget, how); c && verify_cycle(g, *c)) return found(*c, how);
  }
  // Cheap refutations before the expensive searches.
  if (auto cut = cut_search(g, opt)) return refuted(*cut, "cut");
  // Small graphs: the exact table is cheaper than any heuristic.
  if (n <= 16) {
    auto dp = held_karp(g, budget);
    if (dp && !dp->empty()) return found(*dp, "held-karp");
    if (dp) return refuted({CertificateKind::Exhaustive, {}, 1}, "held-karp");
  }
  std::uint64_t heuristic = budget / 2;
  const std::uint64_t before = heuristic;
  auto c = rotation_extension(g, heuristic, opt.seed);
  budget -= before - heuristic;
  if (c) return found(*c, "rotation-extension");
  if (n <= opt.dp_max) {
    auto dp = held_karp(g, budget);
    if (dp && !dp->empty()) return found(*dp, "held-karp");
    if (dp) return refuted({CertificateKind::Exhaustive, {}, 1}, "held-karp");
  } else {
    Backtrack bt{g, budget, std::vector<char>(n, 0), {0}};
    bt.used[0] = 1;
    if (bt.run()) return found(bt.path, "backtracking");
    if (!bt.out_of_budget) return refuted({CertificateKind::Exhaustive, {}, 1}, "backtracking");
  }
  HamiltonResult r;
  r.method = "budget";
  return r;
}

}  // namespace

bool verify_cut(const Graph& g, const CutCertificate& c) {
  if (c.kind == CertificateKind::Order) return g.order() < 3;
  if (c.kind != CertificateKind::Cut) return false;
  VertexSet a(g.order());
  for (VertexId v : c.cut) {
    if (v >= g.order()) return false;
    a.insert(v);
  }
  const std::size_t k = components(g, g.vertices() - a).count;
  return k == c.components && k > std::max<std::size_t>(a.count(), 1);
}

HamiltonResult hamiltonian(const Graph& g, const HamiltonOptions& opt) {
  std::uint64_t budget = opt.budget;
  HamiltonResult r = cascade(g, opt, budget);
  r.nodes = opt.budget - budget;
  // Nothing leaves without an independent check.
  if (r.status == HamiltonStatus::Hamiltonian && !verify_cycle(g, r.cycle)) {
    r.status = HamiltonStatus::Unknown;
    r.method += ":cycle-rejected";
    r.cycle.clear();
  }
  if (r.status == HamiltonStatus::NonHamiltonian && r.certificate &&
      r.certificate->kind != CertificateKind::Exhaustive && !verify_cut(g, *r.certificate)) {
    r.status = HamiltonStatus::Unknown;
    r.method += ":cut-rejected";
    r.certificate.reset();
  }
  return r;
}

std::string to_string(HamiltonStatus s) {
  switch (s) {
    case HamiltonStatus::Hamiltonian:
      return "hamiltonian";
    case HamiltonStatus::NonHamiltonian:
      return "non-hamiltonian";
    case HamiltonStatus::Unknown:
      break;
  }
  return "unknown";
}

std::string HamiltonResult::to_json() const {
  nlohmann::json j;
  j["status"] = to_string(status);
  j["method"] = method;
  j["cycle"] = status == HamiltonStatus::Hamiltonian ? nlohmann::json(cycle) : nlohmann::json(nullptr);
  if (certificate) {
    nlohmann::json c;
    c["kind"] = certificate->kind == CertificateKind::Cut     ? "cut"
                : certificate->kind == CertificateKind::Order ? "order"
                                                              : "exhaustive";
    c["cut"] = certificate->cut;
    c["components"] = certificate->components;
    j["certificate"] = c;
  } else {
    j["certificate"] = nullptr;
  }
  return j.dump();
}

}  // namespace ilm
