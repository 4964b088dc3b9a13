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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ilm/graph.hpp"
#include "ilm/sequence.hpp"

namespace ilm {

/// Locally transitive step: every x gains a clone x' with N(x') = N[x].
/// Clone of vertex i gets id n + i.
Graph lt_step(const Graph& g);

/// Locally anti-transitive step: every x gains an anti-clone x* with
/// N(x*) = V \ N[x].  Anti-clone of vertex i gets id n + i.
Graph lat_step(const Graph& g);

/// lt_step for bit 1, lat_step for bit 0.
Graph apply_step(const Graph& g, int bit);

/// Edge count after one step from a graph with n vertices and e edges:
/// 3e + n for a transitive step, n^2 - e - n for an anti-transitive one.
std::uint64_t predict_edges(std::uint64_t n, std::uint64_t e, int bit);

struct TraceRecord {
  std::uint32_t step = 0;  // generation index of the produced graph
  int bit = 0;             // s_{step-1}
  std::uint64_t n = 0;
  std::uint64_t e = 0;
  std::uint64_t predicted_e = 0;
};

struct GenerationTrace {
  std::vector<TraceRecord> records;

  /// "step,bit,n,e,predicted_e" header plus one row per step.
  std::string to_csv() const;
  bool consistent() const;
};

struct Generation {
  Graph graph;
  GenerationTrace trace;
};

/// ILM_t(S, g0).  Refuses (CapacityError) when 2^t * |g0| exceeds the vertex
/// cap and (UsageError) when a finite sequence is shorter than t.
Generation generate(const Graph& g0, const SequenceSpec& s, std::size_t t);

/// Closed-form (n_t, e_t) by recurrence only, without constructing graphs.
struct SizeRecord {
  std::uint64_t n = 0;
  std::uint64_t e = 0;
};
std::vector<SizeRecord> size_series(std::uint64_t n0, std::uint64_t e0, const SequenceSpec& s, std::size_t t);

}  // namespace ilm
