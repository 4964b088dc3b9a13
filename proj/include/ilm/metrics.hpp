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
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ilm/graph.hpp"
#include "ilm/sequence.hpp"

namespace ilm {

using Rational = boost::multiprecision::cpp_rational;

/// c(v) = |E(G[N(v)])| / C(deg v, 2); 0 when deg v <= 1.
Rational local_clustering(const Graph& g, VertexId v);

/// Number of edges with both ends in N(v).
std::uint64_t neighborhood_edges(const Graph& g, VertexId v);

/// Mean of the local values over all vertices.  Requires g.order() >= 1.
Rational clustering_coefficient(const Graph& g);

struct ClusteringReport {
  std::vector<Rational> local;
  Rational global;
  double global_value = 0;
  std::size_t min_degree = 0;
};
ClusteringReport clustering_report(const Graph& g);

/// Lower-bound curves for comparison with measured clustering.
struct ClusteringBounds {
  double lt_factor = 0;       // 7/8 - 3/(8 delta): one transitive step
  double ilt_product = 0;     // prod_{i=1..t} (7/8 - 3/(8 i)), clamped at zero
  double bounded_gap_floor = 0;  // (7/8)^k / 4^{k+2}
  double lat_floor = 0;       // 1 / 2^{2k+4}
};
ClusteringBounds clustering_bound_curves(std::size_t k, std::size_t t, std::size_t delta);

/// Exact forms of the two k-dependent floors.
Rational bounded_gap_floor(std::size_t k);
Rational lt_step_factor(std::size_t delta);

struct DensityRow {
  std::size_t t = 0;
  std::uint64_t n = 0;
  std::uint64_t e = 0;
  double average = 0;  // e / n
  double density = 0;  // e / C(n, 2); 0 when n < 2
  std::optional<std::size_t> beta;
  std::optional<double> envelope;  // 2^beta (3/2)^(t-beta) n_t
};

struct DensitySeries {
  std::vector<DensityRow> rows;

  /// "t,n,e,e_over_n,density,beta,envelope"
  std::string to_csv() const;
};

/// Series for t = 0..t_max from the exact recurrences (no graph is built,
/// so the vertex cap applies only to the 64-bit range).
DensitySeries density_series(const Graph& g0, const SequenceSpec& s, std::size_t t_max);

/// "t,C,bound_floor" rows for a list of measured values.
struct ClusteringPoint {
  std::size_t t = 0;
  double clustering = 0;
  std::optional<double> bound_floor;
};
std::string clustering_csv(const std::vector<ClusteringPoint>& points);

/// Fixed-precision decimal rendering used by CSV and JSON writers.
std::string format_double(double x);

}  // namespace ilm
