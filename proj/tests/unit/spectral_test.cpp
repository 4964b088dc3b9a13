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

#include "ilm/spectral.hpp"

#include <chrono>
#include <random>

#include <gtest/gtest.h>

#include "ilm/engine.hpp"
#include "ilm/error.hpp"
#include "ilm/named.hpp"
#include "oracle.hpp"

namespace ilm {
namespace {

void expect_spectrum(const Graph& g, std::vector<double> expected) {
  const Spectrum s = spectrum(g);
  ASSERT_EQ(s.eigenvalues.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(s.eigenvalues[i], expected[i], 1e-10);
  EXPECT_TRUE(spectrum_violations(s).empty());
}

TEST(NormalizedLaplacian, Examples) {
  const DenseMatrix k2 = normalized_laplacian(complete_graph(2));
  EXPECT_DOUBLE_EQ(k2.at(0, 0), 1);
  EXPECT_DOUBLE_EQ(k2.at(0, 1), -1);
  const DenseMatrix k1 = normalized_laplacian(complete_graph(1));
  EXPECT_DOUBLE_EQ(k1.at(0, 0), 0);
  const DenseMatrix p3 = normalized_laplacian(path_graph(3));
  EXPECT_NEAR(p3.at(0, 1), -1 / std::sqrt(2.0), 1e-15);
}

TEST(Spectrum, Examples) {
  expect_spectrum(complete_graph(2), {0, 2});
  expect_spectrum(complete_graph(1), {0});
  expect_spectrum(cycle_graph(4), {0, 1, 1, 2});
  expect_spectrum(disjoint_union(complete_graph(2), complete_graph(2)), {0, 0, 2, 2});
  EXPECT_NEAR(spectrum(complete_graph(5)).gap, 0.25, 1e-12);
  EXPECT_NEAR(spectrum(disjoint_union(complete_graph(2), complete_graph(2))).gap, 1, 1e-12);
  const Spectrum one = spectrum(complete_graph(1));
  EXPECT_TRUE(one.degenerate);
  EXPECT_EQ(one.gap, 1);
  EXPECT_EQ(spectrum(empty_graph(3)).isolated_count, 3u);
}

TEST(Spectrum, MatchesJacobiOracle) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const auto o = oracle::random(1 + rng() % 30, 0.25, rng);
    const Spectrum s = spectrum(oracle::to_graph(o));
    const auto ref = oracle::jacobi_eigenvalues(oracle::normalized_laplacian(o));
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(s.eigenvalues[i], ref[i], 1e-9);
    EXPECT_TRUE(spectrum_violations(s).empty());
  }
}

TEST(Spectrum, CapIsEnforced) {
  SpectrumOptions opt;
  opt.cap = 8;
  EXPECT_THROW(spectrum(cycle_graph(9), opt), CapacityError);
}

TEST(Spectrum, AlternatingCycleGapStaysAway) {
  const auto run = generate(cycle_graph(4), parse_sequence("(01)*"), 6);
  for (std::size_t t = 1; t <= 6; ++t) {
    const Spectrum s = spectrum(run.graph.induced_prefix(std::size_t{4} << t));
    EXPECT_GE(s.gap, 0.2) << "t=" << t;
    EXPECT_TRUE(spectrum_violations(s).empty());
  }
}

TEST(StepGapLowerBound, Examples) {
  EXPECT_DOUBLE_EQ(step_gap_lower_bound(4, 4, 1), 0.6);
  EXPECT_DOUBLE_EQ(step_gap_lower_bound(4, 4, 0), 1.0 / 3);
  EXPECT_DOUBLE_EQ(step_gap_lower_bound(5, 10, 0), 0);
  EXPECT_DOUBLE_EQ(step_gap_lower_bound(1, 0, 0), 0);
  EXPECT_GE(spectrum(lt_step(cycle_graph(4))).gap, 0.6 - 1e-9);
}

TEST(StepGapLowerBound, HoldsForEveryGeneratedStep) {
  for (const char* name : {"K1", "K2", "2K1", "C4", "C5", "P4", "K1,3", "K2+K3", "Petersen"})
    for (const char* seq : {"(01)*", "(10)*", "(1)*", "(0)*", "1(100)*"}) {
      const Graph g0 = graph_from_name(name);
      const SequenceSpec s = parse_sequence(seq);
      const auto run = generate(g0, s, 6);
      for (std::size_t t = 1; t <= 6; ++t) {
        const Graph prev = run.graph.induced_prefix(g0.order() << (t - 1));
        const Graph cur = run.graph.induced_prefix(g0.order() << t);
        if (cur.size() == 0) continue;
        const double bound = step_gap_lower_bound(prev.order(), prev.size(), s.bit(t - 1));
        EXPECT_GE(spectrum(cur).gap, bound - 1e-9) << name << " " << seq << " t=" << t;
      }
    }
}

TEST(MixingAudit, CloneSetAfterSteps) {
  for (int bit : {0, 1}) {
    const Graph g = petersen_graph();
    const Graph h = apply_step(g, bit);
    const VertexSet x = VertexSet::range(h.order(), 10, 20);
    const double gap = spectrum(h).gap;
    const MixingAudit a = mixing_audit(h, x, gap);
    EXPECT_TRUE(a.holds);
    // e(X,X) = 0 so the inequality rearranges to gap >= vol(X) / vol(V \ X).
    EXPECT_GE(gap, step_gap_lower_bound(10, 15, bit) - 1e-12);
  }
}

TEST(MixingAudit, DegenerateSetsAreRejected) {
  const Graph g = cycle_graph(5);
  EXPECT_THROW(mixing_audit(g, g.vertices()), UsageError);
  EXPECT_THROW(mixing_audit(g, VertexSet(5)), UsageError);
  const Graph h = disjoint_union(cycle_graph(3), empty_graph(2));
  EXPECT_THROW(mixing_audit(h, VertexSet(5, {3, 4})), UsageError);
}

TEST(MixingAudit, RandomSubsetsOnCorpus) {
  std::mt19937_64 rng(2);
  for (const char* name : {"K2", "C4", "C5", "P4", "K1,3", "K2+K3", "Petersen", "G(40,0.3,7)"}) {
    for (const char* seq : {"", "0", "01", "10"}) {
      Graph g = graph_from_name(name);
      for (const char* c = seq; *c; ++c) g = apply_step(g, *c - '0');
      const double gap = spectrum(g).gap;
      int audited = 0;
      while (audited < 200) {
        VertexSet x(g.order());
        for (VertexId v = 0; v < g.order(); ++v)
          if (rng() & 1) x.insert(v);
        const std::size_t vx = volume(g, x);
        if (vx == 0 || vx == volume(g)) continue;
        EXPECT_TRUE(mixing_audit(g, x, gap).holds) << name << " " << seq;
        ++audited;
      }
    }
  }
}

TEST(Spectrum, ResidualAtThousandVertices) {
  const Graph g = generate(complete_graph(1), parse_sequence("(01)*"), 10).graph;
  const auto start = std::chrono::steady_clock::now();
  const Spectrum s = spectrum(g);
  ASSERT_TRUE(s.residual.has_value());
  EXPECT_LE(*s.residual, 1e-8);
  EXPECT_TRUE(spectrum_violations(s).empty());
  std::cerr << "n=1024 eigensolve: "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
}

TEST(GapCsv, Layout) {
  EXPECT_EQ(gap_csv({{1, 2, 1.0, std::nullopt}, {2, 4, 0.5, 0.25}}), "t,n,gap,step_lower_bound\n1,2,1,\n2,4,0.5,0.25\n");
}

}  // namespace
}  // namespace ilm
