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

#include <map>
#include <cstdio>
#include <cmath>
#include <sstream>

#include "ilm/error.hpp"
#include "ilm/metrics.hpp"

namespace ilm {

std::uint64_t neighborhood_edges(const Graph& g, VertexId v) {
  if (v >= g.order()) throw UsageError("vertex out of range");
  const auto nv = g.row(v);
  std::uint64_t twice = 0;
  VertexSet(g.order(), nv).for_each([&](VertexId u) { twice += bits::popcount_and(g.row(u), nv); });
  return twice / 2;
}

Rational local_clustering(const Graph& g, VertexId v) {
  if (v >= g.order()) throw UsageError("vertex out of range");
  const std::uint64_t d = g.degree(v);
  if (d <= 1) return Rational(0);
  return Rational(neighborhood_edges(g, v), d * (d - 1) / 2);
}

ClusteringReport clustering_report(const Graph& g) {
  if (g.order() == 0) throw UsageError("clustering of the empty graph");
  ClusteringReport r;
  r.local.reserve(g.order());
  // Summing per distinct denominator keeps the big-rational work proportional
  // to the number of distinct degrees.
  std::map<std::uint64_t, std::uint64_t> by_den;
  for (VertexId v = 0; v < g.order(); ++v) {
    const std::uint64_t d = g.degree(v);
    if (d <= 1) {
      r.local.emplace_back(0);
      continue;
    }
    const std::uint64_t den = d * (d - 1) / 2;
    const std::uint64_t num = neighborhood_edges(g, v);
    r.local.emplace_back(num, den);
    by_den[den] += num;
  }
  Rational sum = 0;
  for (const auto& [den, num] : by_den) sum += Rational(num, den);
  r.global = sum / g.order();
  r.global_value = r.global.convert_to<double>();
  r.min_degree = g.min_degree();
  return r;
}

Rational clustering_coefficient(const Graph& g) { return clustering_report(g).global; }

Rational lt_step_factor(std::size_t delta) {
  if (delta == 0) throw UsageError("minimum degree must be at least 1");
  return Rational(7, 8) - Rational(3, 8 * static_cast<std::uint64_t>(delta));
}

Rational bounded_gap_floor(std::size_t k) {
  if (k == 0) throw UsageError("gap bound must be at least 1");
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::pow(cpp_int(7), static_cast<unsigned>(k));
  const cpp_int den = boost::multiprecision::pow(cpp_int(8), static_cast<unsigned>(k)) *
                      boost::multiprecision::pow(cpp_int(4), static_cast<unsigned>(k + 2));
  return Rational(num, den);
}

ClusteringBounds clustering_bound_curves(std::size_t k, std::size_t t, std::size_t delta) {
  ClusteringBounds b;
  b.lt_factor = lt_step_factor(delta).convert_to<double>();
  double prod = 1;
  for (std::size_t i = 1; i <= t; ++i) prod *= std::max(0.0, 0.875 - 0.375 / double(i));
  b.ilt_product = prod;
  b.bounded_gap_floor = bounded_gap_floor(k).convert_to<double>();
  b.lat_floor = std::ldexp(1.0, -static_cast<int>(2 * k + 4));
  return b;
}

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string clustering_csv(const std::vector<ClusteringPoint>& points) {
  std::ostringstream os;
  os << "t,C,bound_floor\n";
  for (const auto& p : points)
    os << p.t << ',' << format_double(p.clustering) << ',' << (p.bound_floor ? format_double(*p.bound_floor) : "")
       << '\n';
  return os.str();
}

}  // namespace ilm
