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

#include "ilm/engine.hpp"

#include <limits>
#include <sstream>

#include "ilm/error.hpp"

namespace ilm {

namespace {

// Builds LT(G) or LAT(G).  For each original x the clone row is either
// N[x] or its complement within V(G); original rows gain the transpose.
Graph clone_step(const Graph& g, bool transitive) {
  const std::size_t n = g.order();
  if (n == 0) throw UsageError("cannot step the empty graph");
  if (2 * n > max_vertices())
    throw CapacityError("step would create " + std::to_string(2 * n) + " vertices, above cap " +
                        std::to_string(max_vertices()));
  GraphBuilder b(2 * n);
  const Origin kind = transitive ? Origin::TransitiveClone : Origin::AntiClone;
  const std::uint32_t step = g.generation() + 1;
  std::vector<Word> clone_row(g.words_per_row());
  for (VertexId v = 0; v < n; ++v) {
    auto src = g.row(v);
    std::copy(src.begin(), src.end(), clone_row.begin());
    bits::set(clone_row, v);
    if (!transitive) {
      for (Word& w : clone_row) w = ~w;
      bits::mask_tail(clone_row, n);
    }
    // Clones of x adjacent to v are exactly the x in clone_row, by symmetry
    // of N[.] and of its complement.
    auto orig = b.row_data(v);
    bits::or_shifted(src, n, orig, 0);
    bits::or_shifted(clone_row, n, orig, n);

    const auto c = static_cast<VertexId>(n + v);
    bits::or_shifted(clone_row, n, b.row_data(c), 0);
    b.set_lineage(v, g.lineage(v));
    b.set_lineage(c, Lineage{kind, v, step});
  }
  b.set_generation(step);
  return std::move(b).build();
}

}  // namespace

Graph lt_step(const Graph& g) { return clone_step(g, true); }
Graph lat_step(const Graph& g) { return clone_step(g, false); }
Graph apply_step(const Graph& g, int bit) { return bit == 0 ? lat_step(g) : lt_step(g); }

std::uint64_t predict_edges(std::uint64_t n, std::uint64_t e, int bit) {
  using wide = unsigned __int128;
  wide r;
  if (bit != 0) {
    r = wide{3} * e + n;
  } else {
    const wide sq = wide{n} * n;
    if (2 * wide{e} + n > sq) throw UsageError("edge count exceeds n(n-1)/2");
    r = sq - e - n;
  }
  if (r > std::numeric_limits<std::uint64_t>::max()) throw CapacityError("edge count overflows 64 bits");
  return static_cast<std::uint64_t>(r);
}

std::string GenerationTrace::to_csv() const {
  std::ostringstream os;
  os << "step,bit,n,e,predicted_e\n";
  for (const auto& r : records) os << r.step << ',' << r.bit << ',' << r.n << ',' << r.e << ',' << r.predicted_e << '\n';
  return os.str();
}

bool GenerationTrace::consistent() const {
  for (const auto& r : records)
    if (r.e != r.predicted_e) return false;
  return true;
}

Generation generate(const Graph& g0, const SequenceSpec& s, std::size_t t) {
  if (g0.order() == 0) throw UsageError("initial graph must have at least one vertex");
  if (t > 0 && !s.has_bit(t - 1))
    throw UsageError("sequence '" + s.to_string() + "' is shorter than " + std::to_string(t) + " steps");
  if (t >= 63 || (g0.order() << t) > max_vertices())
    throw CapacityError("ILM_" + std::to_string(t) + " would exceed the vertex cap " + std::to_string(max_vertices()));
  Generation out{g0, {}};
  for (std::size_t i = 0; i < t; ++i) {
    const int bit = s.bit(i);
    const std::uint64_t predicted = predict_edges(out.graph.order(), out.graph.size(), bit);
    out.graph = apply_step(out.graph, bit);
    out.trace.records.push_back({out.graph.generation(), bit, out.graph.order(), out.graph.size(), predicted});
  }
  return out;
}

std::vector<SizeRecord> size_series(std::uint64_t n0, std::uint64_t e0, const SequenceSpec& s, std::size_t t) {
  std::vector<SizeRecord> out{{n0, e0}};
  for (std::size_t i = 0; i < t; ++i) {
    const auto& prev = out.back();
    if (prev.n > (std::uint64_t{1} << 62)) throw CapacityError("vertex count overflows");
    out.push_back({2 * prev.n, predict_edges(prev.n, prev.e, s.bit(i))});
  }
  return out;
}

}  // namespace ilm
