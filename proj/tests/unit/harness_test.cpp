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

#include "ilm/harness.hpp"

#include <filesystem>

#include <gtest/gtest.h>

#include "ilm/error.hpp"
#include "ilm/io.hpp"

namespace ilm {
namespace {

CorpusSpec small_corpus(std::vector<std::string> graphs, std::vector<std::string> seqs, std::size_t t_max) {
  CorpusSpec c = CorpusSpec::builtin();
  c.graphs = std::move(graphs);
  c.random_graphs.clear();
  c.sequences = std::move(seqs);
  c.t_max = t_max;
  return c;
}

const TheoremReport* find(const std::vector<TheoremReport>& rs, const std::string& id, const std::string& graph,
                          std::size_t t) {
  for (const auto& r : rs)
    if (r.theorem == id && r.instance.graph == graph && r.instance.t == t) return &r;
  return nullptr;
}

TEST(Corpus, JsonRoundTrip) {
  const CorpusSpec c = CorpusSpec::builtin();
  EXPECT_EQ(CorpusSpec::from_json(c.to_json()).to_json(), c.to_json());
  nlohmann::json j = {{"graphs", {"C4"}}, {"t_max", 3}, {"caps", {{"spectral", 64}}}};
  const CorpusSpec d = CorpusSpec::from_json(j);
  EXPECT_EQ(d.graphs, std::vector<std::string>{"C4"});
  EXPECT_EQ(d.t_max, 3u);
  EXPECT_EQ(d.caps.spectral, 64u);
  EXPECT_EQ(d.caps.chromatic, c.caps.chromatic);
}

TEST(Corpus, RejectsBadInput) {
  EXPECT_THROW(CorpusSpec::from_json({{"graph", {"C4"}}}), ParseError);
  EXPECT_THROW(CorpusSpec::from_json({{"caps", {{"nope", 1}}}}), ParseError);
  EXPECT_THROW(CorpusSpec::from_json({{"t_max", "ten"}}), ParseError);
  EXPECT_THROW(CorpusSpec::from_json({{"sequences", {"01x"}}}), ParseError);
  EXPECT_THROW(CorpusSpec::from_json(nlohmann::json::array()), ParseError);
}

TEST(Corpus, NamedSequencesAndRandomGraphs) {
  EXPECT_EQ(resolve_sequence("ones"), "(1)*");
  EXPECT_EQ(resolve_sequence("zeros"), "(0)*");
  EXPECT_EQ(resolve_sequence("alternating"), "(10)*");
  EXPECT_EQ(resolve_sequence("1(100)*"), "1(100)*");
  EXPECT_EQ((RandomGraphSpec{8, 0.5, 7}.name()), "G(8,0.5,7)");
  const auto names = CorpusSpec::builtin().graph_names();
  EXPECT_EQ(names.back(), "G(12,0.3,11)");
}

TEST(TheoremList, ParsesAndOrders) {
  EXPECT_EQ(parse_theorem_list("all").size(), 18u);
  EXPECT_EQ(parse_theorem_list("thm-specgap, thm-density"),
            (std::vector<std::string>{"thm-density", "thm-specgap"}));
  EXPECT_THROW(parse_theorem_list("thm-nope"), UsageError);
  EXPECT_THROW(parse_theorem_list(""), UsageError);
}

TEST(Campaign, EvenExample) {
  const auto rs = run_campaign(small_corpus({"K1"}, {"(10)*"}, 9), {"thm-even"});
  const auto* r = find(rs, "thm-even", "K1", 8);
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->measured["e"], 13705);
  EXPECT_NEAR(r->measured["ratio"].get<double>(), 13705.0 / (16.0 / 19.0 * 16384.0), 1e-12);
  EXPECT_NEAR(r->measured["ratio"].get<double>(), 0.99334, 1e-4);
  EXPECT_EQ(r->verdict, Verdict::Pass);
  const auto* r12 = find(rs, "thm-even", "K1", 12);
  ASSERT_NE(r12, nullptr);
  EXPECT_FALSE(r12->measured.contains("constructed_e"));  // beyond t_max: recurrence only
  EXPECT_EQ(r12->verdict, Verdict::Pass);
}

TEST(Campaign, DominationExample) {
  const auto rs = run_campaign(small_corpus({"C4"}, {"0101"}, 4), {"thm-dom3"});
  const auto* r = find(rs, "thm-dom3", "C4", 4);
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->measured["gamma"], 3);
  EXPECT_EQ(r->verdict, Verdict::Pass);
}

TEST(Campaign, ChiPlusOneExample) {
  const auto rs = run_campaign(small_corpus({"C5"}, {"1"}, 1), {"lem-chi+1"});
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].measured["chi_before"], 3);
  EXPECT_EQ(rs[0].measured["chi_after"], 4);
  EXPECT_EQ(rs[0].verdict, Verdict::Pass);
}

TEST(Campaign, HypothesesGiveNotApplicable) {
  const auto rs = run_campaign(small_corpus({"K1", "C4"}, {"ones"}, 3), {"thm-hamilton", "thm-diam3", "thm-dom3"});
  for (const auto& r : rs) EXPECT_EQ(r.verdict, Verdict::NotApplicable) << r.theorem << " " << r.instance.to_string();
  EXPECT_EQ(rs.size(), 6u);
}

TEST(Campaign, DeterministicAcrossWorkerCounts) {
  CorpusSpec c = small_corpus({"C4", "P4", "K2+K3"}, {"(01)*", "zeros"}, 4);
  c.threads = 1;
  const auto a = export_reports(run_campaign(c, theorem_ids()), "json");
  c.threads = 4;
  const auto b = export_reports(run_campaign(c, theorem_ids()), "json");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("runtime_ms\": 0"), std::string::npos);
}

TEST(Campaign, CapacityIsIsolated) {
  CorpusSpec c = small_corpus({"Petersen", "C4"}, {"(01)*"}, 3);
  c.caps.max_vertices = 8;
  const auto rs = run_campaign(c, {"thm-density"});
  const auto s = summarize(rs);
  EXPECT_EQ(s.fail, 1u);
  EXPECT_EQ(s.inconclusive, 1u);
  EXPECT_EQ(s.pass, 1u);  // C4 reaches t = 1 under the cap
}

TEST(Export, Formats) {
  const auto rs = run_campaign(small_corpus({"K1,3"}, {"(01)*"}, 3), {"thm-density", "lem-radius3"});
  ASSERT_FALSE(rs.empty());
  const std::string json = export_reports(rs, "json");
  EXPECT_EQ(export_reports(reports_from_json(json), "json"), json);
  const std::string csv = export_reports(rs, "csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "theorem,instance,measured,expected,verdict,runtime_ms");
  EXPECT_NE(csv.find("\"K1,3 (01)* t=1\""), std::string::npos);
  const std::string text = export_reports(rs, "text");
  const auto s = summarize(rs);
  const std::string last = "PASS " + std::to_string(s.pass) + "/" + std::to_string(s.pass + s.fail) + "\n";
  EXPECT_EQ(text.substr(text.size() - last.size()), last);
  EXPECT_THROW(export_reports(rs, "xml"), UsageError);
  EXPECT_THROW(reports_from_json("{}"), ParseError);
}

TEST(Export, PlotSeries) {
  const auto dir = std::filesystem::temp_directory_path() / "ilm_plot_test";
  std::filesystem::remove_all(dir);
  const auto files = export_plot_series(small_corpus({"C4"}, {"(01)*"}, 3), dir);
  ASSERT_EQ(files.size(), 3u);
  EXPECT_EQ(files[0].filename(), "density_C4_r01.csv");
  EXPECT_EQ(read_file(files[1]).substr(0, 16), "t,C,bound_floor\n");
  EXPECT_EQ(read_file(files[2]).substr(0, 26), "t,n,gap,step_lower_bound\n0");
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace ilm
