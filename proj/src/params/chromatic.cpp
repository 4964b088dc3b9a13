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

#include "ilm/params.hpp"

namespace ilm {
namespace {

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

// DSATUR state shared by the greedy pass and the exact search.  Vertex order
// is fully determined by (saturation, degree, id), so runs are reproducible.
class Dsatur {
 public:
  Dsatur(const Graph& g, std::size_t max_colors)
      : g_(g), n_(g.order()), k_(max_colors), color_(n_, kNone), cnt_(n_ * k_, 0), sat_(n_, 0) {}

  VertexId pick() const {
    VertexId best = VertexSet::npos;
    for (VertexId v = 0; v < n_; ++v) {
      if (color_[v] != kNone) continue;
      if (best == VertexSet::npos || sat_[v] > sat_[best] ||
          (sat_[v] == sat_[best] && g_.degree(v) > g_.degree(best)))
        best = v;
    }
    return best;
  }

  bool available(VertexId v, std::uint32_t c) const { return cnt_[std::size_t{v} * k_ + c] == 0; }

  void assign(VertexId v, std::uint32_t c) {
    color_[v] = c;
    g_.neighborhood(v).for_each([&](VertexId u) {
      if (cnt_[std::size_t{u} * k_ + c]++ == 0) ++sat_[u];
    });
  }

  void unassign(VertexId v) {
    const std::uint32_t c = color_[v];
    color_[v] = kNone;
    g_.neighborhood(v).for_each([&](VertexId u) {
      if (--cnt_[std::size_t{u} * k_ + c] == 0) --sat_[u];
    });
  }

  const std::vector<std::uint32_t>& colors() const { return color_; }

 private:
  const Graph& g_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> cnt_;
  std::vector<std::uint32_t> sat_;
};

struct Search {
  Dsatur state;
  std::size_t n;
  std::size_t lower;
  std::size_t upper;
  std::vector<std::uint32_t> best;
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  bool exhausted = false;
  bool done = false;

  void run(std::size_t colored, std::uint32_t used) {
    if (done) return;
    if (colored == n) {
      upper = used;
      best = state.colors();
      done = upper <= lower;
      return;
    }
    if (++nodes > budget) {
      exhausted = done = true;
      return;
    }
    const VertexId v = state.pick();
    // A new colour is only worth opening while it stays below the incumbent.
    for (std::uint32_t c = 0; !done && c <= used && c + 2 <= upper; ++c) {
      if (!state.available(v, c)) continue;
      state.assign(v, c);
      run(colored + 1, std::max(used, c + 1));
      state.unassign(v);
    }
  }
};

std::vector<std::uint32_t> greedy_dsatur(const Graph& g, std::size_t& used) {
  Dsatur d(g, std::max<std::size_t>(1, g.max_degree() + 1));
  used = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const VertexId v = d.pick();
    std::uint32_t c = 0;
    while (!d.available(v, c)) ++c;
    d.assign(v, c);
    used = std::max<std::size_t>(used, c + 1);
  }
  return d.colors();
}

}  // namespace

std::vector<VertexId> greedy_clique(const Graph& g) {
  std::vector<VertexId> order(g.order());
  for (VertexId v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  std::vector<VertexId> best;
  const std::size_t starts = std::min<std::size_t>(order.size(), 64);
  for (std::size_t i = 0; i < starts; ++i) {
    std::vector<VertexId> clique{order[i]};
    VertexSet cand = g.neighborhood(order[i]);
    while (!cand.empty()) {
      // Extend by the candidate keeping the most candidates alive.
      VertexId pick = VertexSet::npos;
      std::size_t keep = 0;
      cand.for_each([&](VertexId u) {
        const std::size_t k = bits::popcount_and(cand.words(), g.row(u));
        if (pick == VertexSet::npos || k > keep) {
          pick = u;
          keep = k;
        }
      });
      clique.push_back(pick);
      cand &= g.neighborhood(pick);
    }
    if (clique.size() > best.size()) best = clique;
  }
  std::sort(best.begin(), best.end());
  return best;
}

bool is_proper_coloring(const Graph& g, const std::vector<std::uint32_t>& colors) {
  if (colors.size() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget, bool lineage_bounds) {
  ChromaticResult r;
  if (g.order() == 0) {
    r.exact = true;
    return r;
  }
  std::size_t used = 0;
  r.coloring = greedy_dsatur(g, used);
  r.upper = used;
  r.lower = greedy_clique(g).size();
  if (r.lower < r.upper) {
    Search s{Dsatur(g, r.upper), g.order(), r.lower, r.upper, r.coloring, 0, budget};
    s.run(0, 0);
    r.nodes = s.nodes;
    r.upper = s.upper;
    r.coloring = s.best;
    r.budget_exhausted = s.exhausted;
    if (!s.exhausted) r.lower = r.upper;
  }
  r.exact = r.lower == r.upper;

  // Lineage bracket: the originals form ILM_0 and every step adds an
  // independent set of clones.
  const std::size_t t = g.generation();
  if (!r.exact && lineage_bounds && t > 0 && t < 64 && (g.order() >> t) << t == g.order()) {
    const std::size_t n0 = g.order() >> t;
    const ChromaticResult root = chromatic_number(g.induced_prefix(n0), budget, false);
    if (root.exact) {
      const std::size_t lo = root.lower + t - 1, hi = root.lower + t;
      if (lo > r.lower) r.lower = lo;
      if (hi < r.upper) {
        r.upper = hi;
        std::vector<std::uint32_t> col(g.order());
        for (VertexId v = 0; v < g.order(); ++v)
          col[v] = v < n0 ? root.coloring[v] : static_cast<std::uint32_t>(root.lower + g.lineage(v).step - 1);
        r.coloring = std::move(col);
      }
      r.theorem_bounds = true;
      r.exact = r.lower == r.upper;
    }
  }
  return r;
}

}  // namespace ilm
