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

#include <random>

#include <gtest/gtest.h>

#include "ilm/error.hpp"
#include "ilm/named.hpp"
#include "oracle.hpp"

namespace ilm {
namespace {

TEST(LtStep, Examples) {
  const Graph k2 = lt_step(complete_graph(1));
  EXPECT_EQ(k2.order(), 2u);
  EXPECT_EQ(k2.size(), 1u);

  const Graph d = lt_step(complete_graph(2));
  EXPECT_EQ(d.order(), 4u);
  EXPECT_EQ(d.size(), 5u);
  EXPECT_FALSE(d.adjacent(2, 3));  // the two clones

  // Regression pin for the transitive recurrence: LT(C_4) has 3*4 + 4 edges.
  const Graph c = lt_step(cycle_graph(4));
  EXPECT_EQ(c.order(), 8u);
  EXPECT_EQ(c.size(), 16u);
}

TEST(LatStep, Examples) {
  const Graph a = lat_step(complete_graph(1));
  EXPECT_EQ(a.order(), 2u);
  EXPECT_EQ(a.size(), 0u);

  const Graph b = lat_step(complete_graph(2));
  EXPECT_EQ(b.order(), 4u);
  EXPECT_EQ(b.size(), 1u);
  EXPECT_EQ(components(b).count, 3u);

  const Graph c = lat_step(cycle_graph(4));
  EXPECT_EQ(c.order(), 8u);
  EXPECT_EQ(c.size(), 8u);
}

TEST(Steps, MatchBruteForceDefinition) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 70;  // crosses word boundaries
    const oracle::Naive base = oracle::random(n, 0.1 + 0.8 * double(trial % 5) / 4, rng);
    const Graph g = oracle::to_graph(base);
    EXPECT_TRUE(oracle::same(oracle::lt(base), lt_step(g)));
    EXPECT_TRUE(oracle::same(oracle::lat(base), lat_step(g)));
  }
}

TEST(Steps, PerVertexDegreeLaws) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(3 + rng() % 30, 0.4, rng());
    const std::size_t n = g.order();
    const Graph t = lt_step(g);
    const Graph a = lat_step(g);
    for (VertexId v = 0; v < n; ++v) {
      EXPECT_EQ(t.degree(v), 2 * g.degree(v) + 1);
      EXPECT_EQ(t.degree(static_cast<VertexId>(n + v)), g.degree(v) + 1);
      EXPECT_EQ(a.degree(v), n - 1);
      EXPECT_EQ(g.degree(v) + a.degree(static_cast<VertexId>(n + v)), n - 1);
    }
    EXPECT_EQ(a.max_degree(), a.order() / 2 - 1);
    EXPECT_TRUE(t.induced_prefix(n).same_adjacency(g));
    EXPECT_TRUE(a.induced_prefix(n).same_adjacency(g));
  }
}

TEST(Steps, ClonesOfOneStepArePairwiseNonAdjacent) {
  const Graph g = lat_step(lt_step(petersen_graph()));
  for (VertexId u = 20; u < 40; ++u)
    for (VertexId v = 20; v < 40; ++v) EXPECT_FALSE(g.adjacent(u, v));
  for (VertexId v = 20; v < 40; ++v) {
    EXPECT_EQ(g.lineage(v).origin, Origin::AntiClone);
    EXPECT_EQ(g.lineage(v).parent, v - 20);
    EXPECT_EQ(g.lineage(v).step, 2u);
  }
}

TEST(PredictEdges, Examples) {
  EXPECT_EQ(predict_edges(4, 4, 1), 16u);
  EXPECT_EQ(predict_edges(2, 1, 0), 1u);
  EXPECT_EQ(predict_edges(1, 0, 0), 0u);
  EXPECT_THROW(predict_edges(3, 4, 0), UsageError);
}

TEST(Generate, CycleWithAlternatingSequence) {
  const auto run = generate(cycle_graph(4), parse_sequence("(01)*"), 4);
  EXPECT_EQ(run.graph.order(), 64u);
  EXPECT_EQ(run.graph.size(), 656u);  // 4 -> 8 -> 32 -> 208 -> 656 by recurrence
  ASSERT_EQ(run.trace.records.size(), 4u);
  EXPECT_TRUE(run.trace.consistent());
  EXPECT_EQ(run.trace.records[0].bit, 0);
  EXPECT_EQ(run.trace.records[1].bit, 1);
}

TEST(Generate, AlternatingFromK1) {
  const auto run = generate(complete_graph(1), parse_sequence("(10)*"), 8);
  EXPECT_EQ(run.graph.order(), 256u);
  EXPECT_EQ(run.graph.size(), 13705u);
  EXPECT_EQ(size_series(1, 0, parse_sequence("(10)*"), 8).back().e, 13705u);
}

TEST(Generate, IltAverageDegreeIsExact) {
  // 2 e_t = 3^t (Vol + 2 n_0) - 2^{t+1} n_0 is the average-degree formula
  // multiplied through by n_t = 2^t n_0.
  for (const Graph& g0 : {complete_graph(1), cycle_graph(5), petersen_graph(), path_graph(4)}) {
    const auto run = generate(g0, parse_sequence("(1)*"), 7);
    std::uint64_t pow3 = 1, pow2 = 1;
    for (const auto& r : run.trace.records) {
      pow3 *= 3;
      pow2 *= 2;
      EXPECT_EQ(2 * r.e, pow3 * (2 * g0.size() + 2 * g0.order()) - 2 * pow2 * g0.order());
    }
  }
}

TEST(Generate, InducedEmbeddingOfEveryPrefix) {
  const auto run = generate(cycle_graph(5), parse_sequence("1(100)*"), 6);
  Graph prev = cycle_graph(5);
  SequenceSpec s = parse_sequence("1(100)*");
  for (std::size_t t = 1; t <= 6; ++t) {
    const Graph cur = apply_step(prev, s.bit(t - 1));
    EXPECT_TRUE(run.graph.induced_prefix(cur.order()).same_adjacency(cur));
    prev = cur;
  }
}

TEST(Generate, Errors) {
  EXPECT_THROW(generate(cycle_graph(4), parse_sequence("01"), 3), UsageError);
  const std::size_t old = max_vertices();
  set_max_vertices(64);
  EXPECT_THROW(generate(cycle_graph(4), parse_sequence("(1)*"), 5), CapacityError);
  EXPECT_NO_THROW(generate(cycle_graph(4), parse_sequence("(1)*"), 4));
  set_max_vertices(old);
}

TEST(Trace, CsvLayout) {
  const auto run = generate(complete_graph(1), parse_sequence("10"), 2);
  EXPECT_EQ(run.trace.to_csv(), "step,bit,n,e,predicted_e\n1,1,2,1,1\n2,0,4,1,1\n");
}

}  // namespace
}  // namespace ilm
