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

#include <algorithm>
#include <sstream>

#include "ilm/error.hpp"
#include "ilm/harness.hpp"
#include "ilm/metrics.hpp"
#include "ilm/sequence.hpp"

namespace ilm {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NotApplicable:
      return "not-applicable";
    case Verdict::RecordedOnly:
      break;
  }
  return "recorded-only";
}

namespace {

Verdict verdict_from(std::string_view s) {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::NotApplicable, Verdict::RecordedOnly})
    if (to_string(v) == s) return v;
  throw ParseError("unknown verdict '" + std::string(s) + "'");
}

}  // namespace

std::string InstanceDescriptor::to_string() const {
  return graph + " " + sequence + " t=" + std::to_string(t);
}

std::string RandomGraphSpec::name() const {
  return "G(" + std::to_string(n) + "," + format_double(p) + "," + std::to_string(seed) + ")";
}

std::string resolve_sequence(std::string_view name_or_text) {
  if (name_or_text == "ones") return "(1)*";
  if (name_or_text == "zeros") return "(0)*";
  if (name_or_text == "alternating") return "(10)*";
  return parse_sequence(name_or_text).to_string();
}

std::vector<std::string> CorpusSpec::graph_names() const {
  std::vector<std::string> out = graphs;
  for (const auto& r : random_graphs) out.push_back(r.name());
  return out;
}

std::vector<std::string> CorpusSpec::sequence_texts() const {
  std::vector<std::string> out;
  for (const auto& s : sequences) out.push_back(resolve_sequence(s));
  return out;
}

CorpusSpec CorpusSpec::builtin() {
  CorpusSpec c;
  c.graphs = {"K1", "K2", "2K1", "C4", "C5", "P4", "K1,3", "K2+K3", "Petersen", "K1+C4"};
  c.random_graphs = {{8, 0.5, 7}, {12, 0.3, 11}};
  c.sequences = {"ones", "zeros", "(01)*", "(10)*", "1(100)*"};
  return c;
}

json CorpusSpec::to_json() const {
  json j;
  j["graphs"] = graphs;
  j["random_graphs"] = json::array();
  for (const auto& r : random_graphs) j["random_graphs"].push_back({{"n", r.n}, {"p", r.p}, {"seed", r.seed}});
  j["sequences"] = sequences;
  j["t_max"] = t_max;
  j["caps"] = {{"max_vertices", caps.max_vertices}, {"chromatic", caps.chromatic}, {"clustering", caps.clustering},
               {"spectral", caps.spectral},         {"domination", caps.domination}, {"hamilton", caps.hamilton},
               {"diameter", caps.diameter}};
  j["budgets"] = {{"coloring", budgets.coloring}, {"domination", budgets.domination}, {"hamilton", budgets.hamilton}};
  j["seed"] = seed;
  j["mixing_subsets"] = mixing_subsets;
  j["mixing_tolerance"] = mixing_tolerance;
  j["even_tolerance"] = even_tolerance;
  j["even_t_max"] = even_t_max;
  j["even_t_min"] = even_t_min;
  j["zeta_orders"] = zeta_orders;
  j["induced_order"] = induced_order;
  j["induced_lt_order"] = induced_lt_order;
  j["threads"] = threads;
  j["timings"] = timings;
  return j;
}

namespace {

template <class T>
void take(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("corpus key '") + key + "': " + e.what());
  }
}

void reject_unknown(const json& j, std::initializer_list<const char*> known, const char* where) {
  for (const auto& [k, v] : j.items())
    if (std::none_of(known.begin(), known.end(), [&](const char* x) { return k == x; }))
      throw ParseError(std::string("unknown key '") + k + "' in " + where);
}

}  // namespace

CorpusSpec CorpusSpec::from_json(const json& j) {
  if (!j.is_object()) throw ParseError("corpus must be a JSON object");
  reject_unknown(j,
                 {"graphs", "random_graphs", "sequences", "t_max", "caps", "budgets", "seed", "mixing_subsets",
                  "mixing_tolerance", "even_tolerance", "even_t_max", "even_t_min", "zeta_orders", "induced_order",
                  "induced_lt_order", "threads", "timings"},
                 "corpus");
  CorpusSpec c = builtin();
  take(j, "graphs", c.graphs);
  if (j.contains("random_graphs")) {
    c.random_graphs.clear();
    for (const auto& r : j.at("random_graphs")) {
      reject_unknown(r, {"n", "p", "seed"}, "random_graphs");
      RandomGraphSpec spec;
      take(r, "n", spec.n);
      take(r, "p", spec.p);
      take(r, "seed", spec.seed);
      if (spec.n == 0 || spec.p < 0 || spec.p > 1) throw ParseError("random graph needs n >= 1 and 0 <= p <= 1");
      c.random_graphs.push_back(spec);
    }
  }
  take(j, "sequences", c.sequences);
  take(j, "t_max", c.t_max);
  if (j.contains("caps")) {
    const json& k = j.at("caps");
    reject_unknown(k, {"max_vertices", "chromatic", "clustering", "spectral", "domination", "hamilton", "diameter"},
                   "caps");
    take(k, "max_vertices", c.caps.max_vertices);
    take(k, "chromatic", c.caps.chromatic);
    take(k, "clustering", c.caps.clustering);
    take(k, "spectral", c.caps.spectral);
    take(k, "domination", c.caps.domination);
    take(k, "hamilton", c.caps.hamilton);
    take(k, "diameter", c.caps.diameter);
  }
  if (j.contains("budgets")) {
    const json& b = j.at("budgets");
    reject_unknown(b, {"coloring", "domination", "hamilton"}, "budgets");
    take(b, "coloring", c.budgets.coloring);
    take(b, "domination", c.budgets.domination);
    take(b, "hamilton", c.budgets.hamilton);
  }
  take(j, "seed", c.seed);
  take(j, "mixing_subsets", c.mixing_subsets);
  take(j, "mixing_tolerance", c.mixing_tolerance);
  take(j, "even_tolerance", c.even_tolerance);
  take(j, "even_t_max", c.even_t_max);
  take(j, "even_t_min", c.even_t_min);
  take(j, "zeta_orders", c.zeta_orders);
  take(j, "induced_order", c.induced_order);
  take(j, "induced_lt_order", c.induced_lt_order);
  take(j, "threads", c.threads);
  take(j, "timings", c.timings);
  for (std::size_t n : c.zeta_orders)
    if (n < 3) throw ParseError("zeta_orders entries must be at least 3");
  if (c.induced_order < 1 || c.induced_order > 6 || c.induced_lt_order < 1 || c.induced_lt_order > 6)
    throw ParseError("induced orders must lie in 1..6");
  for (const auto& s : c.sequences) resolve_sequence(s);  // validate early
  return c;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "thm-density", "thm-even",      "thm-chrom",        "lem-chi+1",          "lem-radius3",
      "thm-dom3",    "thm-dom2-class", "lem-partition-pair", "lem-lat-disconnect", "thm-diam3",
      "thm-specgap", "lem-mix",        "lem-cluster-lt",   "lem-cluster-lat",    "thm-cluster-boundedgap",
      "thm-hamilton", "thm-zeta-star", "thm-induced-universal"};
  return ids;
}

std::vector<std::string> parse_theorem_list(std::string_view text) {
  if (text == "all") return theorem_ids();
  std::vector<std::string> picked;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    if (std::find(theorem_ids().begin(), theorem_ids().end(), item) == theorem_ids().end())
      throw UsageError("unknown theorem id '" + item + "'");
    if (std::find(picked.begin(), picked.end(), item) == picked.end()) picked.push_back(item);
  }
  if (picked.empty()) throw UsageError("no theorem ids given");
  // Report order follows the registry, not the command line.
  std::vector<std::string> ordered;
  for (const auto& id : theorem_ids())
    if (std::find(picked.begin(), picked.end(), id) != picked.end()) ordered.push_back(id);
  return ordered;
}

CampaignSummary summarize(const std::vector<TheoremReport>& reports) {
  CampaignSummary s;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::Pass:
        ++s.pass;
        break;
      case Verdict::Fail:
        ++s.fail;
        break;
      case Verdict::NotApplicable:
        ++s.not_applicable;
        break;
      case Verdict::RecordedOnly:
        ++s.recorded_only;
        break;
    }
    s.inconclusive += r.inconclusive;
  }
  return s;
}

namespace {

json report_to_json(const TheoremReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["instance"] = {{"graph", r.instance.graph}, {"sequence", r.instance.sequence}, {"t", r.instance.t}};
  j["measured"] = r.measured;
  j["expected"] = r.expected;
  j["verdict"] = to_string(r.verdict);
  j["inconclusive"] = r.inconclusive;
  j["note"] = r.note;
  j["runtime_ms"] = r.runtime_ms ? json::parse(format_double(*r.runtime_ms)) : json(nullptr);
  return j;
}

// "k=v;k=v" with values in their JSON spelling minus string quotes.
std::string flatten(const json& obj) {
  std::string out;
  for (const auto& [k, v] : obj.items()) {
    if (!out.empty()) out += ';';
    out += k + '=' + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

std::string export_reports(const std::vector<TheoremReport>& reports, std::string_view format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = "theorem,instance,measured,expected,verdict,runtime_ms\n";
    for (const auto& r : reports) {
      out += csv_field(r.theorem) + ',' + csv_field(r.instance.to_string()) + ',' + csv_field(flatten(r.measured)) +
             ',' + csv_field(flatten(r.expected)) + ',' + to_string(r.verdict) + ',' +
             (r.runtime_ms ? format_double(*r.runtime_ms) : "") + '\n';
    }
    return out;
  }
  if (format == "text") {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << r.theorem << "  " << r.instance.to_string() << "  " << to_string(r.verdict);
      if (r.inconclusive) os << " (inconclusive)";
      os << "\n    measured: " << flatten(r.measured) << "\n    expected: " << flatten(r.expected) << '\n';
      if (!r.note.empty()) os << "    note: " << r.note << '\n';
    }
    const CampaignSummary s = summarize(reports);
    os << "NOT-APPLICABLE " << s.not_applicable << '\n'
       << "RECORDED-ONLY " << s.recorded_only << '\n'
       << "FAIL " << s.fail << " (inconclusive " << s.inconclusive << ")\n"
       << "PASS " << s.pass << '/' << (s.pass + s.fail) << '\n';
    return os.str();
  }
  throw UsageError("unknown export format '" + std::string(format) + "' (json, csv, text)");
}

std::vector<TheoremReport> reports_from_json(std::string_view text) {
  json arr;
  try {
    arr = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  if (!arr.is_array()) throw ParseError("report JSON must be an array");
  std::vector<TheoremReport> out;
  try {
    for (const auto& j : arr) {
      TheoremReport r;
      r.theorem = j.at("theorem").get<std::string>();
      r.instance.graph = j.at("instance").at("graph").get<std::string>();
      r.instance.sequence = j.at("instance").at("sequence").get<std::string>();
      r.instance.t = j.at("instance").at("t").get<std::size_t>();
      r.measured = j.at("measured");
      r.expected = j.at("expected");
      r.verdict = verdict_from(j.at("verdict").get<std::string>());
      r.inconclusive = j.at("inconclusive").get<bool>();
      r.note = j.at("note").get<std::string>();
      if (!j.at("runtime_ms").is_null()) r.runtime_ms = j.at("runtime_ms").get<double>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  return out;
}

}  // namespace ilm
