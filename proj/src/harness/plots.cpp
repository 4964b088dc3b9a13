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

#include <cctype>

#include "ilm/engine.hpp"
#include "ilm/harness.hpp"
#include "ilm/io.hpp"
#include "ilm/metrics.hpp"
#include "ilm/named.hpp"
#include "ilm/spectral.hpp"

namespace ilm {
namespace {

std::string slug(const std::string& graph, const std::string& seq) {
  std::string out;
  for (char c : graph) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '.') out += c;
    else if (c == '+') out += "-u-";
    else if (c == ',') out += '-';
  }
  out += '_';
  for (char c : seq) {
    if (c == '0' || c == '1') out += c;
    else if (c == '(') out += 'r';
  }
  return out;
}

}  // namespace

std::vector<std::filesystem::path> export_plot_series(const CorpusSpec& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& name : corpus.graph_names())
    for (const auto& text : corpus.sequence_texts()) {
      const Graph g0 = graph_from_name(name);
      const SequenceSpec s = parse_sequence(text);
      std::size_t T = 0;
      while (T < corpus.t_max && (g0.order() << (T + 1)) <= corpus.caps.max_vertices && s.has_bit(T)) ++T;
      const std::string base = slug(name, text);

      std::size_t t_density = corpus.t_max;
      while (t_density > 0 && !s.has_bit(t_density - 1)) --t_density;
      const auto density = density_series(g0, s, t_density);
      written.push_back(dir / ("density_" + base + ".csv"));
      write_file(written.back(), density.to_csv());

      const Graph last = generate(g0, s, T).graph;
      const auto k = s.gap_bound();
      const auto tau3 = s.zero_index(3);
      std::vector<ClusteringPoint> cpoints;
      std::vector<GapPoint> gpoints;
      for (std::size_t t = 0; t <= T; ++t) {
        const Graph g = last.induced_prefix(g0.order() << t);
        if (g.order() <= corpus.caps.clustering) {
          ClusteringPoint cp{t, clustering_report(g).global_value, std::nullopt};
          if (k && tau3 && t >= *tau3) cp.bound_floor = bounded_gap_floor(*k).convert_to<double>();
          cpoints.push_back(cp);
        }
        if (g.order() <= corpus.caps.spectral) {
          GapPoint gp{t, g.order(), spectrum(g, {std::max(corpus.caps.spectral, g.order()), 0}).gap, std::nullopt};
          if (t > 0) {
            const Graph prev = last.induced_prefix(g0.order() << (t - 1));
            gp.step_lower_bound = step_gap_lower_bound(prev.order(), prev.size(), s.bit(t - 1));
          }
          gpoints.push_back(gp);
        }
      }
      written.push_back(dir / ("clustering_" + base + ".csv"));
      write_file(written.back(), clustering_csv(cpoints));
      written.push_back(dir / ("gap_" + base + ".csv"));
      write_file(written.back(), gap_csv(gpoints));
    }
  return written;
}

}  // namespace ilm
