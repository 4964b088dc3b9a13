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

#include "json.hpp"

#include "ilm/params.hpp"

namespace ilm {
namespace {

nlohmann::json optional_count(const std::optional<std::size_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

ParameterReport parameter_report(const Graph& g, const ParameterOptions& opt) {
  ParameterReport r;
  r.distance = diameter_radius(g);
  r.chromatic = chromatic_number(g, opt.coloring_budget, true);
  r.domination = domination_number(g, opt.domination_cap, opt.domination_budget);
  r.partition_pair = find_partition_pair(g);
  r.dominating = dominating_vertex(g);
  return r;
}

std::string ParameterReport::to_json() const {
  nlohmann::json j;
  j["diameter"] = optional_count(distance.diameter);
  j["radius"] = optional_count(distance.radius);
  j["components"] = distance.components;
  j["component_diameters"] = distance.component_diameters;
  j["component_radii"] = distance.component_radii;
  nlohmann::json chi;
  chi["exact"] = chromatic.exact;
  chi["lower"] = chromatic.lower;
  chi["upper"] = chromatic.upper;
  chi["value"] = chromatic.exact ? nlohmann::json(chromatic.lower) : nlohmann::json(nullptr);
  chi["budget_exhausted"] = chromatic.budget_exhausted;
  chi["theorem_bounds"] = chromatic.theorem_bounds;
  j["chromatic"] = chi;
  nlohmann::json dom;
  dom["gamma"] = domination.gamma;
  dom["witness"] = domination.witness;
  dom["exact"] = domination.exact;
  j["domination"] = dom;
  j["partition_pair"] =
      partition_pair ? nlohmann::json::array({partition_pair->first, partition_pair->second}) : nlohmann::json(nullptr);
  j["dominating_vertex"] = dominating ? nlohmann::json(*dominating) : nlohmann::json(nullptr);
  return j.dump();
}

}  // namespace ilm
