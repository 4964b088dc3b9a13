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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ilm {

enum class Verdict { Pass, Fail, NotApplicable, RecordedOnly };

std::string to_string(Verdict v);

/// Everything needed to replay one check: graph name (random graphs use the
/// "G(n,p,seed)" form), canonical sequence text and time step.
struct InstanceDescriptor {
  std::string graph;
  std::string sequence;
  std::size_t t = 0;

  std::string to_string() const;  // "C4 (01)* t=4"
  friend bool operator==(const InstanceDescriptor&, const InstanceDescriptor&) = default;
};

struct TheoremReport {
  std::string theorem;
  InstanceDescriptor instance;
  nlohmann::json measured = nlohmann::json::object();
  nlohmann::json expected = nlohmann::json::object();
  Verdict verdict = Verdict::NotApplicable;
  /// Set when a budget or size cap stopped the check; such a row is a fail
  /// that says nothing about the theorem.
  bool inconclusive = false;
  std::string note;
  std::optional<double> runtime_ms;  // only when CorpusSpec::timings is on
};

/// Caps bound the order of graphs a given family of checks will touch.
struct CorpusCaps {
  std::size_t max_vertices = 512;   // generation cap for every pair
  std::size_t chromatic = 40;       // exact colouring
  std::size_t clustering = 512;
  std::size_t spectral = 512;
  std::size_t domination = 512;
  std::size_t hamilton = 512;
  std::size_t diameter = 512;
};

struct CorpusBudgets {
  std::uint64_t coloring = 10'000'000;
  std::uint64_t domination = 2'000'000;
  std::uint64_t hamilton = 20'000'000;
};

struct RandomGraphSpec {
  std::size_t n = 0;
  double p = 0;
  std::uint64_t seed = 0;
  std::string name() const;  // "G(n,p,seed)"
};

struct CorpusSpec {
  std::vector<std::string> graphs;            // named graphs, see graph_from_name
  std::vector<RandomGraphSpec> random_graphs;
  std::vector<std::string> sequences;         // names (ones, zeros, ...) or sequence text
  std::size_t t_max = 10;
  CorpusCaps caps;
  CorpusBudgets budgets;
  std::uint64_t seed = 20240601;              // mixing subsets, Hamilton restarts
  std::size_t mixing_subsets = 200;
  double mixing_tolerance = 1e-6;
  double even_tolerance = 0.01;
  std::size_t even_t_max = 12;                // recurrence-only beyond the cap
  std::size_t even_t_min = 8;                 // tolerance asserted from here on
  std::vector<std::size_t> zeta_orders{3, 4, 5, 9};
  std::size_t induced_order = 3;              // l for the ILM sweep at t = 2(l + C(l,2) - 1)
  std::size_t induced_lt_order = 4;           // l for the ILT-only sweep at t = l + C(l,2) - 1
  std::size_t threads = 0;                    // 0 = hardware concurrency
  bool timings = false;

  /// Every named graph, then every random graph, by name.
  std::vector<std::string> graph_names() const;
  /// Canonical sequence text for every entry of `sequences`.
  std::vector<std::string> sequence_texts() const;

  nlohmann::json to_json() const;
  /// Missing keys keep their defaults; unknown keys are a ParseError.
  static CorpusSpec from_json(const nlohmann::json& j);
  static CorpusSpec builtin();
};

/// "ones" -> "(1)*", "zeros" -> "(0)*", "alternating" -> "(10)*"; anything
/// else is parsed as sequence text.  Returns the canonical text.
std::string resolve_sequence(std::string_view name_or_text);

/// Stable theorem ids in report order.
const std::vector<std::string>& theorem_ids();
/// "all" or a comma separated list of ids; UsageError on an unknown id.
std::vector<std::string> parse_theorem_list(std::string_view text);

/// Runs the selected checks over the corpus.  Work is split into units (one
/// per graph/sequence pair, plus the star and induced-subgraph sweeps) that a
/// bounded pool of workers executes; the result is merged in unit order so it
/// does not depend on scheduling.  A failing or throwing check never stops
/// the others.
std::vector<TheoremReport> run_campaign(const CorpusSpec& corpus, const std::vector<std::string>& theorems);

struct CampaignSummary {
  std::size_t pass = 0, fail = 0, not_applicable = 0, recorded_only = 0, inconclusive = 0;
};
CampaignSummary summarize(const std::vector<TheoremReport>& reports);

/// "json", "csv" or "text"; UsageError otherwise.
std::string export_reports(const std::vector<TheoremReport>& reports, std::string_view format);
std::vector<TheoremReport> reports_from_json(std::string_view text);

/// Plot-ready series for every graph/sequence pair of the corpus:
/// density_<slug>.csv, clustering_<slug>.csv and gap_<slug>.csv under `dir`.
/// Returns the written paths in order.
std::vector<std::filesystem::path> export_plot_series(const CorpusSpec& corpus, const std::filesystem::path& dir);

}  // namespace ilm
