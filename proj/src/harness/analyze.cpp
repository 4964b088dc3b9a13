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

#include "ilm/analyze.hpp"

#include "json.hpp"

#include "ilm/error.hpp"
#include "ilm/metrics.hpp"
#include "ilm/params.hpp"
#include "ilm/spectral.hpp"
#include "ilm/structure.hpp"

namespace ilm {
namespace {

using nlohmann::json;

json num(double x) { return json::parse(format_double(x)); }

json metrics_section(const Graph& g) {
  const auto c = clustering_report(g);
  const double n = double(g.order());
  json j;
  j["clustering"] = num(c.global_value);
  j["clustering_exact"] = c.global.str();
  j["min_degree"] = c.min_degree;
  j["max_degree"] = g.max_degree();
  j["average_degree"] = num(n > 0 ? 2.0 * double(g.size()) / n : 0.0);
  j["density"] = num(n > 1 ? 2.0 * double(g.size()) / (n * (n - 1)) : 0.0);
  return j;
}

json spectral_section(const Graph& g) {
  const auto s = spectrum(g);
  json j;
  j["gap"] = num(s.gap);
  j["lambda_min_nonzero"] = s.eigenvalues.size() > 1 ? num(s.eigenvalues[1]) : json(nullptr);
  j["lambda_max"] = s.eigenvalues.empty() ? json(nullptr) : num(s.eigenvalues.back());
  j["isolated"] = s.isolated_count;
  j["residual"] = s.residual ? num(*s.residual) : json(nullptr);
  j["violations"] = spectrum_violations(s);
  return j;
}

struct Sections {
  const AnalyzeOptions& opt;
  bool inconclusive = false;

  template <class F>
  json guarded(F&& f) {
    try {
      return f();
    } catch (const CapacityError& e) {
      inconclusive = true;
      return json{{"error", e.what()}};
    }
  }

  json of(const Graph& g) {
    json j;
    j["n"] = g.order();
    j["e"] = g.size();
    if (opt.metrics) j["metrics"] = guarded([&] { return metrics_section(g); });
    if (opt.params)
      j["params"] = guarded([&] {
        const auto p = parameter_report(g);
        if (!p.chromatic.exact || !p.domination.exact) inconclusive = true;
        return json::parse(p.to_json());
      });
    if (opt.spectral) j["spectral"] = guarded([&] { return spectral_section(g); });
    if (opt.structure)
      j["structure"] = guarded([&] {
        const auto h = hamiltonian(g);
        if (h.status == HamiltonStatus::Unknown) inconclusive = true;
        return json{{"hamilton", json::parse(h.to_json())}};
      });
    return j;
  }
};

}  // namespace

Analysis analyze(const Graph& g, const AnalyzeOptions& in) {
  AnalyzeOptions opt = in;
  if (!opt.metrics && !opt.params && !opt.spectral && !opt.structure)
    opt.metrics = opt.params = opt.spectral = opt.structure = true;
  Sections s{opt};
  json out;
  out["generation"] = g.generation();
  json gens = json::array();
  const std::size_t t = opt.per_generation ? g.generation() : 0;
  const std::size_t n0 = g.order() >> g.generation();
  for (std::size_t i = opt.per_generation ? 0 : t; i <= t; ++i) {
    const bool last = i == t;
    json j = s.of(last ? g : g.induced_prefix(n0 << i));
    j["t"] = opt.per_generation ? i : std::size_t{g.generation()};
    gens.push_back(std::move(j));
  }
  out["generations"] = std::move(gens);
  return {out.dump(2) + "\n", s.inconclusive};
}

}  // namespace ilm
