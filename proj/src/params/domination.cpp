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

// R := V \ (N[a] ∪ ... ) restricted to live words; returns false when empty.
void remove_closed(const Graph& g, VertexId v, std::vector<Word>& r) {
  const auto row = g.row(v);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] &= ~row[i];
  bits::reset(r, v);
}

bool none(const std::vector<Word>& r) {
  return std::all_of(r.begin(), r.end(), [](Word w) { return w == 0; });
}

std::size_t first_bit(const std::vector<Word>& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i]) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(r[i]));
  return VertexSet::npos;
}

// R ⊆ N[w]
bool covers(const Graph& g, VertexId w, const std::vector<Word>& r) {
  const auto row = g.row(w);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Word rest = r[i] & ~row[i];
    if (rest == 0) continue;
    if (i == w / kWordBits) rest &= ~(Word{1} << (w % kWordBits));
    if (rest) return false;
  }
  return true;
}

std::vector<Word> full_words(const Graph& g) {
  std::vector<Word> r(g.words_per_row(), ~Word{0});
  bits::mask_tail(r, g.order());
  return r;
}

// Smallest w > after with R ⊆ N[w]; only members of N[first(R)] qualify.
std::optional<VertexId> completer(const Graph& g, const std::vector<Word>& r, VertexId after) {
  const auto f = static_cast<VertexId>(first_bit(r));
  std::optional<VertexId> out;
  auto consider = [&](VertexId w) {
    if (!out && w > after && covers(g, w, r)) out = w;
  };
  // N[f] in increasing id order: f itself slots in among its neighbours.
  const VertexSet nf = g.neighborhood(f) | VertexSet(g.order(), {f});
  nf.for_each(consider);
  return out;
}

struct Exact {
  const Graph& g;
  std::size_t k;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<VertexId> pick;
  std::size_t max_closed = 0;

  bool run(const std::vector<Word>& r, VertexId next) {
    if (none(r)) return true;
    if (pick.size() == k) return false;
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    const std::size_t left = k - pick.size();
    if (left * max_closed < bits::popcount(r)) return false;
    // Some later pick must dominate the smallest uncovered vertex.
    const auto f = static_cast<VertexId>(first_bit(r));
    bool reachable = f >= next;
    if (!reachable) {
      const auto row = g.row(f);
      for (VertexId w = next; w < g.order() && !reachable; ++w) reachable = bits::test(row, w);
    }
    if (!reachable) return false;
    for (VertexId w = next; w < g.order() && !exhausted; ++w) {
      std::vector<Word> r2 = r;
      remove_closed(g, w, r2);
      if (r2 == r) continue;
      pick.push_back(w);
      if (run(r2, w + 1)) return true;
      pick.pop_back();
    }
    return false;
  }
};

std::vector<VertexId> greedy_dominating(const Graph& g) {
  std::vector<Word> r = full_words(g);
  std::vector<VertexId> d;
  while (!none(r)) {
    VertexId best = 0;
    std::size_t gain = 0;
    for (VertexId v = 0; v < g.order(); ++v) {
      std::size_t c = bits::popcount_and(g.row(v), r) + (bits::test(r, v) ? 1 : 0);
      if (c > gain) {
        gain = c;
        best = v;
      }
    }
    d.push_back(best);
    remove_closed(g, best, r);
  }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<VertexId> dominating_vertex(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) return v;
  return std::nullopt;
}

std::optional<VertexId> isolated_vertex(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return v;
  return std::nullopt;
}

bool is_dominating_set(const Graph& g, const std::vector<VertexId>& d) {
  std::vector<Word> r = full_words(g);
  for (VertexId v : d) {
    if (v >= g.order()) return false;
    remove_closed(g, v, r);
  }
  return none(r);
}

DominationResult domination_number(const Graph& g, std::size_t cap, std::uint64_t budget) {
  DominationResult out;
  const std::size_t n = g.order();
  if (n == 0) return out;
  if (auto v = dominating_vertex(g)) {
    out.gamma = 1;
    out.witness = {*v};
    return out;
  }
  if (cap >= 2) {
    for (VertexId u = 0; u < n; ++u) {
      std::vector<Word> r = full_words(g);
      remove_closed(g, u, r);
      if (auto v = completer(g, r, u)) {
        out.gamma = 2;
        out.witness = {u, *v};
        return out;
      }
    }
  }
  if (cap >= 3) {
    for (VertexId u = 0; u < n; ++u) {
      std::vector<Word> ru = full_words(g);
      remove_closed(g, u, ru);
      for (VertexId v = u + 1; v < n; ++v) {
        std::vector<Word> r = ru;
        remove_closed(g, v, r);
        if (auto w = completer(g, r, v)) {
          out.gamma = 3;
          out.witness = {u, v, *w};
          return out;
        }
      }
    }
  }
  const std::vector<VertexId> greedy = greedy_dominating(g);
  const std::size_t closed_max = g.max_degree() + 1;
  std::uint64_t spent = 0;
  for (std::size_t k = std::max<std::size_t>(cap + 1, 1); k < greedy.size(); ++k) {
    Exact e{g, k, budget > spent ? budget - spent : 0, 0, false, {}, closed_max};
    const bool found = e.run(full_words(g), 0);
    spent += e.nodes;
    if (found) {
      out.gamma = k;
      out.witness = e.pick;
      return out;
    }
    if (e.exhausted) {
      out.gamma = greedy.size();
      out.witness = greedy;
      out.exact = false;
      return out;
    }
  }
  out.gamma = greedy.size();
  out.witness = greedy;
  return out;
}

std::optional<std::pair<VertexId, VertexId>> find_partition_pair(const Graph& g) {
  const std::size_t n = g.order();
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.degree(u) + g.degree(v) + 2 != n || g.adjacent(u, v)) continue;
      if (bits::popcount_and(g.row(u), g.row(v)) != 0) continue;
      // Disjoint and of total size n, hence a partition.
      return std::make_pair(u, v);
    }
  return std::nullopt;
}

bool is_two_clique_union(const Graph& g) {
  const Components c = components(g);
  if (c.count != 2) return false;
  std::size_t a = 0;
  for (auto l : c.label) a += l == 0;
  const std::size_t b = g.order() - a;
  return g.size() == a * (a - 1) / 2 + b * (b - 1) / 2;
}

bool lat_connectivity_predicate(const Graph& g) { return dominating_vertex(g).has_value() || is_two_clique_union(g); }

DominationClass classify_domination_2(const Graph& g0, const SequenceSpec& s, std::size_t t) {
  const auto tau1 = s.zero_index(1);
  if (!tau1) throw UsageError("sequence has no zero");
  if (t < *tau1 + 1) throw UsageError("t must be at least tau1 + 1");
  DominationClass c;
  const bool second_zero = s.has_bit(*tau1 + 1) && s.bit(*tau1 + 1) == 0;
  const bool dominating = dominating_vertex(g0).has_value();
  if (find_partition_pair(g0)) c.conditions.push_back(1);
  if (isolated_vertex(g0) && *tau1 == 0) c.conditions.push_back(2);
  if (dominating && second_zero && t >= *tau1 + 2) c.conditions.push_back(3);
  c.predicts_two = !c.conditions.empty();
  c.recorded_only = !c.predicts_two && dominating && second_zero && t == *tau1 + 1;
  return c;
}

}  // namespace ilm
