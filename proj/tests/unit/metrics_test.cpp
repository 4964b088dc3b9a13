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

#include "ilm/metrics.hpp"

#include <random>

#include <gtest/gtest.h>

#include "ilm/engine.hpp"
#include "ilm/error.hpp"
#include "ilm/named.hpp"
#include "oracle.hpp"

namespace ilm {
namespace {

Graph c4_with_chord() {
  GraphBuilder b(4);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  b.add_edge(3, 0);
  b.add_edge(0, 2);
  return std::move(b).build();
}

TEST(LocalClustering, Examples) {
  EXPECT_EQ(local_clustering(complete_graph(3), 1), Rational(1));
  EXPECT_EQ(local_clustering(complete_bipartite(1, 3), 0), Rational(0));
  EXPECT_EQ(local_clustering(c4_with_chord(), 0), Rational(2, 3));
  EXPECT_EQ(local_clustering(c4_with_chord(), 1), Rational(1));
  EXPECT_EQ(local_clustering(path_graph(2), 0), Rational(0));
  EXPECT_THROW(local_clustering(path_graph(2), 2), UsageError);
}

TEST(LocalClustering, ChordedCycleDegreeThreeVertex) {
  // Degree-3 vertex whose neighbourhood spans one edge: 1 / C(3,2).
  GraphBuilder b(4);
  b.add_edge(0, 1);
  b.add_edge(0, 2);
  b.add_edge(0, 3);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  b.add_edge(3, 1);
  const Graph k4 = std::move(b).build();
  EXPECT_EQ(local_clustering(k4, 0), Rational(1));
  GraphBuilder p(4);
  p.add_edge(0, 1);
  p.add_edge(0, 2);
  p.add_edge(0, 3);
  p.add_edge(1, 2);
  EXPECT_EQ(local_clustering(std::move(p).build(), 0), Rational(1, 3));
}

TEST(ClusteringCoefficient, Examples) {
  EXPECT_EQ(clustering_coefficient(complete_graph(4)), Rational(1));
  EXPECT_EQ(clustering_coefficient(empty_graph(2)), Rational(0));
  EXPECT_EQ(clustering_coefficient(cycle_graph(5)), Rational(0));
  EXPECT_THROW(clustering_coefficient(empty_graph(0)), UsageError);
}

TEST(ClusteringCoefficient, MatchesOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto o = oracle::random(1 + rng() % 40, 0.5, rng);
    const Graph g = oracle::to_graph(o);
    Rational sum = 0;
    for (std::size_t v = 0; v < o.n; ++v) {
      const auto [num, den] = oracle::clustering(o, v);
      const Rational c = den == 0 ? Rational(0) : Rational(num, den);
      EXPECT_EQ(local_clustering(g, static_cast<VertexId>(v)), c);
      sum += c;
    }
    const auto rep = clustering_report(g);
    EXPECT_EQ(rep.global, sum / o.n);
    EXPECT_GE(rep.global, 0);
    EXPECT_LE(rep.global, 1);
  }
}

TEST(ClusteringCoefficient, PinnedIlmValues) {
  // Exact values from a brute-force construction in rational arithmetic.
  const auto a = generate(complete_graph(1), parse_sequence("(01)*"), 5);
  EXPECT_EQ(clustering_coefficient(a.graph.induced_prefix(8)), Rational(5, 6));
  EXPECT_EQ(clustering_coefficient(a.graph.induced_prefix(16)), Rational(163, 210));
  EXPECT_EQ(clustering_coefficient(a.graph), Rational(49657, 110880));
  const auto b = generate(complete_graph(1), parse_sequence("(10)*"), 4);
  EXPECT_EQ(clustering_coefficient(b.graph.induced_prefix(8)), Rational(5, 12));
  EXPECT_EQ(clustering_coefficient(b.graph), Rational(3, 8));
}

TEST(ClusteringCoefficient, AntiTransitiveFloorOnAlternatingSequence) {
  const SequenceSpec s = parse_sequence("(01)*");
  const std::size_t tau3 = *s.zero_index(3);
  const Rational floor(1, 256);
  const auto run = generate(complete_graph(1), s, 10);
  for (std::size_t t = tau3; t <= 10; ++t) {
    const Graph gt = run.graph.induced_prefix(std::size_t{1} << t);
    EXPECT_GE(clustering_coefficient(gt), floor) << "t=" << t;
    EXPECT_GE(clustering_coefficient(gt), bounded_gap_floor(2)) << "t=" << t;
  }
}

TEST(ClusteringCoefficient, TransitiveStepLemma) {
  std::mt19937_64 rng(123);
  int checked = 0;
  while (checked < 50) {
    const Graph base = random_graph(4 + rng() % 20, 0.3 + 0.5 * double(rng() % 100) / 100, rng());
    const SequenceSpec s = parse_sequence(checked % 2 ? "(01)*" : "1(10)*");
    const Graph g = generate(base, s, rng() % 3).graph;
    if (g.min_degree() == 0) continue;
    const Graph h = lt_step(g);
    const auto before = clustering_report(g);
    const auto after = clustering_report(h);
    EXPECT_GE(after.global, lt_step_factor(g.min_degree()) * before.global);
    for (VertexId x = 0; x < g.order(); ++x)
      EXPECT_GE(after.local[g.order() + x], before.local[x]) << "clone of " << x;
    ++checked;
  }
}

TEST(BoundCurves, Examples) {
  EXPECT_EQ(bounded_gap_floor(2), Rational(49, 16384));
  const auto b = clustering_bound_curves(2, 5, 3);
  EXPECT_DOUBLE_EQ(b.lt_factor, 0.75);
  EXPECT_NEAR(b.bounded_gap_floor, 0.00299072265625, 1e-15);
  EXPECT_DOUBLE_EQ(b.lat_floor, 1.0 / 256);
  EXPECT_NEAR(clustering_bound_curves(1, 1, 1000000).lt_factor, 0.875, 1e-6);
  EXPECT_DOUBLE_EQ(clustering_bound_curves(1, 1, 1).ilt_product, 0.5);
  EXPECT_THROW(lt_step_factor(0), UsageError);
}

TEST(DensitySeries, AlternatingEvenSteps) {
  const auto ds = density_series(complete_graph(1), parse_sequence("(10)*"), 12);
  ASSERT_EQ(ds.rows.size(), 13u);
  EXPECT_EQ(ds.rows[8].e, 13705u);
  EXPECT_EQ(ds.rows[8].n, 256u);
  const Rational ratio = Rational(ds.rows[8].e) / (Rational(16, 19) * Rational(std::uint64_t{1} << 14));
  EXPECT_EQ(ratio, Rational(260395, 262144));
  EXPECT_EQ(ds.rows[12].e, 3530449u);
  EXPECT_EQ(ds.rows[0].beta, std::nullopt);
  EXPECT_EQ(ds.rows[3].beta, 3u);
  EXPECT_EQ(ds.rows[4].beta, 3u);
}

TEST(DensitySeries, AllZerosFromK1) {
  const auto ds = density_series(complete_graph(1), parse_sequence("(0)*"), 10);
  const std::uint64_t expected[] = {0, 0, 2, 10, 46, 194, 798, 3234, 13022, 52258, 209374};
  for (std::size_t t = 0; t <= 10; ++t) EXPECT_EQ(ds.rows[t].e, expected[t]);
  // The anti-transitive regime settles near 2/5 of the average-degree scale.
  EXPECT_NEAR(2.0 * ds.rows[10].e / double(ds.rows[10].n) / double(1 << 10), 0.4, 0.01);
}

TEST(DensitySeries, TransitiveAverageDegreeFormula) {
  for (const Graph& g : {cycle_graph(4), petersen_graph(), complete_bipartite(1, 3)}) {
    const auto ds = density_series(g, parse_sequence("(1)*"), 8);
    for (const auto& r : ds.rows) {
      const double avg = 2.0 * double(r.e) / double(r.n);
      const double formula = std::pow(1.5, double(r.t)) * (2.0 * g.size() / double(g.order()) + 2) - 2;
      EXPECT_NEAR(avg, formula, 1e-9 * formula + 1e-12);
    }
  }
}

TEST(DensitySeries, DensifiesOnCorpus) {
  for (const char* name : {"K1", "K2", "2K1", "C4", "C5", "P4", "K1,3", "K2+K3", "Petersen"})
    for (const char* seq : {"(0)*", "(01)*", "(10)*", "1(100)*"}) {
      const SequenceSpec s = parse_sequence(seq);
      const auto ds = density_series(graph_from_name(name), s, 14);
      for (std::size_t t = *s.zero_index(1) + 2; t <= 14; ++t)
        EXPECT_GT(ds.rows[t].average, ds.rows[t - 2].average) << name << " " << seq << " t=" << t;
    }
}

TEST(DensitySeries, CsvHeader) {
  const auto ds = density_series(complete_graph(1), parse_sequence("10"), 2);
  EXPECT_EQ(ds.to_csv(), "t,n,e,e_over_n,density,beta,envelope\n0,1,0,0,0,,\n1,2,1,0.5,1,1,4\n"
                         "2,4,1,0.25,0.166666666667,1,12\n");
}

}  // namespace
}  // namespace ilm
