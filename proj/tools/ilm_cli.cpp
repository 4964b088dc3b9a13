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

// ilm command-line front end.  Talks to the library only through ilm.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ilm/ilm.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct Failure {
  int code;
  std::string message;
};

void check(ilm_status s, const std::string& what) {
  if (s == ILM_OK) return;
  throw Failure{s == ILM_ERR_CAPACITY ? kExitCapacity : kExitUsage, what + ": " + ilm_last_error()};
}

struct Str {
  char* p = nullptr;
  ~Str() { ilm_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};
using Graph = Handle<ilm_graph, ilm_graph_free>;
using Corpus = Handle<ilm_corpus, ilm_corpus_free>;
using Report = Handle<ilm_report, ilm_report_free>;

void write(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  f << text;
  if (!f) throw Failure{kExitUsage, "cannot write " + p.string()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) throw Failure{kExitUsage, "cannot read " + p.string()};
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void load_corpus(const std::string& source, Corpus& c) {
  if (source == "builtin") return check(ilm_corpus_builtin(&c.p), "corpus");
  if (!fs::exists(source)) throw Failure{kExitUsage, "no such corpus file: " + source};
  check(ilm_corpus_from_json(slurp(source).c_str(), &c.p), "corpus " + source);
}

struct GenerateArgs {
  std::string graph, sequence, out, trace;
  std::size_t steps = 0;
};

int run_generate(const GenerateArgs& a) {
  Graph g0, g;
  if (fs::is_regular_file(a.graph))
    check(ilm_graph_load(a.graph.c_str(), &g0.p), "graph " + a.graph);
  else
    check(ilm_graph_from_name(a.graph.c_str(), &g0.p), "graph " + a.graph);
  Str trace;
  check(ilm_generate(g0.p, a.sequence.c_str(), a.steps, &g.p, a.trace.empty() ? nullptr : &trace.p), "generate");
  check(ilm_graph_save(g.p, a.out.c_str()), "save");
  if (!a.trace.empty()) write(a.trace, trace.str());
  std::cout << "n=" << ilm_graph_order(g.p) << " e=" << ilm_graph_size(g.p) << " t=" << ilm_graph_generation(g.p)
            << "\n";
  return kExitOk;
}

struct AnalyzeArgs {
  std::string in, out;
  bool metrics = false, params = false, spectral = false, structure = false, final_only = false;
};

int run_analyze(const AnalyzeArgs& a) {
  Graph g;
  check(ilm_graph_load(a.in.c_str(), &g.p), "analyze");
  unsigned flags = (a.metrics ? ILM_ANALYZE_METRICS : 0u) | (a.params ? ILM_ANALYZE_PARAMS : 0u) |
                   (a.spectral ? ILM_ANALYZE_SPECTRAL : 0u) | (a.structure ? ILM_ANALYZE_STRUCTURE : 0u) |
                   (a.final_only ? ILM_ANALYZE_FINAL_ONLY : 0u);
  Str json;
  int inconclusive = 0;
  check(ilm_analyze(g.p, flags, &json.p, &inconclusive), "analyze");
  if (a.out.empty())
    std::cout << json.str();
  else
    write(a.out, json.str());
  return inconclusive ? kExitCapacity : kExitOk;
}

struct VerifyArgs {
  std::string corpus = "builtin", theorems = "all", out;
  std::size_t threads = 0;
  bool threads_set = false;
};

int run_verify(const VerifyArgs& a, bool timings) {
  Corpus c;
  load_corpus(a.corpus, c);
  if (a.threads_set) check(ilm_corpus_set_threads(c.p, a.threads), "threads");
  if (timings) check(ilm_corpus_set_timings(c.p, 1), "timings");
  Report r;
  check(ilm_campaign_run(c.p, a.theorems.c_str(), &r.p), "verify");
  const fs::path dir(a.out);
  for (const char* fmt : {"json", "csv", "text"}) {
    Str s;
    check(ilm_report_export(r.p, fmt, &s.p), "export");
    write(dir / (std::string("report.") + (std::string(fmt) == "text" ? "txt" : fmt)), s.str());
  }
  Str corpus_json;
  check(ilm_corpus_to_json(c.p, &corpus_json.p), "corpus");
  write(dir / "corpus.json", corpus_json.str());
  ilm_summary s{};
  check(ilm_report_summary(r.p, &s), "summary");
  std::cout << "pass " << s.pass << " fail " << s.fail << " (inconclusive " << s.inconclusive << ") not-applicable "
            << s.not_applicable << " recorded-only " << s.recorded_only << "\n";
  if (s.fail > s.inconclusive) return kExitFailed;
  return s.inconclusive ? kExitCapacity : kExitOk;
}

struct PlotArgs {
  std::string in, out;
};

int run_plots(const PlotArgs& a) {
  if (!fs::is_directory(a.in)) throw Failure{kExitUsage, "not a directory: " + a.in};
  Corpus c;
  const fs::path corpus = fs::path(a.in) / "corpus.json";
  load_corpus(fs::exists(corpus) ? corpus.string() : "builtin", c);
  const fs::path out = a.out.empty() ? fs::path(a.in) / "plots" : fs::path(a.out);
  Str files;
  check(ilm_export_plots(c.p, out.string().c_str(), &files.p), "export-plots");
  std::cout << files.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated local model graphs: generation, analysis and verification"};
  app.require_subcommand(1);
  bool timings = false;
  std::size_t max_vertices = 0;
  app.add_flag("--timings", timings, "Record per-check runtime_ms in reports");
  app.add_option("--max-vertices", max_vertices, "Override the vertex cap (also ILM_MAX_VERTICES)");
  app.set_version_flag("--version", std::string(ilm_version()));

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Build ILM_t(S, G) and write it as an edge list");
  g->add_option("--graph", gen.graph, "Named graph or edge-list file")->required();
  g->add_option("--sequence", gen.sequence, "Step sequence, e.g. 1(10)*")->required();
  g->add_option("--steps", gen.steps, "Number of steps t")->required();
  g->add_option("--out", gen.out, "Output edge-list path")->required();
  g->add_option("--trace", gen.trace, "Optional per-step CSV trace");

  AnalyzeArgs an;
  auto* a = app.add_subcommand("analyze", "Report metrics and parameters of a graph file");
  a->add_option("--in", an.in, "Edge-list file")->required();
  a->add_option("--out", an.out, "Write JSON here instead of stdout");
  a->add_flag("--metrics", an.metrics, "Clustering and density");
  a->add_flag("--params", an.params, "Distances, chromatic and domination numbers");
  a->add_flag("--spectral", an.spectral, "Normalized Laplacian spectrum");
  a->add_flag("--structure", an.structure, "Hamiltonicity");
  a->add_flag("--final-only", an.final_only, "Skip earlier generations");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run the verification campaign");
  v->add_option("--corpus", ver.corpus, "Corpus JSON file or 'builtin'")->capture_default_str();
  v->add_option("--theorems", ver.theorems, "Comma separated ids or 'all'")->capture_default_str();
  v->add_option("--out", ver.out, "Output directory")->required();
  v->add_option("--threads", ver.threads, "Worker threads (0 = all cores)");

  PlotArgs pl;
  auto* p = app.add_subcommand("export-plots", "Write density, clustering and gap CSV series");
  p->add_option("--in", pl.in, "Directory (its corpus.json is used when present)")->required();
  p->add_option("--out", pl.out, "Output directory (default <in>/plots)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (max_vertices) ilm_set_max_vertices(max_vertices);
    if (*g) return run_generate(gen);
    if (*a) return run_analyze(an);
    if (*v) {
      ver.threads_set = v->count("--threads") > 0;
      return run_verify(ver, timings);
    }
    return run_plots(pl);
  } catch (const Failure& f) {
    std::cerr << "ilm: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "ilm: " << e.what() << "\n";
    return kExitUsage;
  }
}
