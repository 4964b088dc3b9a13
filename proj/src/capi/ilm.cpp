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

#include "ilm/ilm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ilm/analyze.hpp"
#include "ilm/engine.hpp"
#include "ilm/error.hpp"
#include "ilm/harness.hpp"
#include "ilm/io.hpp"
#include "ilm/named.hpp"

struct ilm_graph {
  ilm::Graph g;
};
struct ilm_corpus {
  ilm::CorpusSpec spec;
};
struct ilm_report {
  std::vector<ilm::TheoremReport> rows;
};

namespace {

thread_local std::string last_error;

ilm_status fail(ilm_status s, const char* what) {
  last_error = what;
  return s;
}

/// Runs f, translating exceptions into status codes.
template <class F>
ilm_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return ILM_OK;
  } catch (const ilm::UsageError& e) {
    return fail(ILM_ERR_USAGE, e.what());
  } catch (const ilm::ParseError& e) {
    return fail(ILM_ERR_PARSE, e.what());
  } catch (const ilm::CapacityError& e) {
    return fail(ILM_ERR_CAPACITY, e.what());
  } catch (const ilm::IoError& e) {
    return fail(ILM_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ILM_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(ILM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ILM_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw ilm::UsageError(std::string(what) + " must not be null");
}

}  // namespace

extern "C" {

const char* ilm_version(void) { return "1.0.0"; }
const char* ilm_last_error(void) { return last_error.c_str(); }
void ilm_string_free(char* s) { std::free(s); }

size_t ilm_max_vertices(void) { return ilm::max_vertices(); }
void ilm_set_max_vertices(size_t n) { ilm::set_max_vertices(n); }

ilm_status ilm_graph_from_name(const char* name, ilm_graph** out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    *out = new ilm_graph{ilm::graph_from_name(name)};
  });
}

ilm_status ilm_graph_load(const char* path, ilm_graph** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    if (!std::filesystem::exists(path)) throw ilm::UsageError(std::string("no such file: ") + path);
    *out = new ilm_graph{ilm::load_graph(path)};
  });
}

ilm_status ilm_graph_save(const ilm_graph* g, const char* path) {
  return guard([&] {
    need(g, "graph");
    need(path, "path");
    ilm::save_graph(g->g, path);
  });
}

ilm_status ilm_graph_parse(const char* text, ilm_graph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new ilm_graph{ilm::parse_edge_list(text)};
  });
}

void ilm_graph_free(ilm_graph* g) { delete g; }
size_t ilm_graph_order(const ilm_graph* g) { return g ? g->g.order() : 0; }
size_t ilm_graph_size(const ilm_graph* g) { return g ? g->g.size() : 0; }
uint32_t ilm_graph_generation(const ilm_graph* g) { return g ? g->g.generation() : 0; }

int ilm_graph_has_edge(const ilm_graph* g, uint32_t u, uint32_t v) {
  if (!g || u >= g->g.order() || v >= g->g.order() || u == v) return 0;
  return g->g.adjacent(u, v) ? 1 : 0;
}

ilm_status ilm_graph_edge_list(const ilm_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(ilm::to_edge_list(g->g));
  });
}

ilm_status ilm_graph_dot(const ilm_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(ilm::to_dot(g->g));
  });
}

ilm_status ilm_generate(const ilm_graph* g0, const char* sequence, size_t steps, ilm_graph** out, char** trace_csv) {
  return guard([&] {
    need(g0, "graph");
    need(sequence, "sequence");
    need(out, "out");
    auto gen = ilm::generate(g0->g, ilm::parse_sequence(sequence), steps);
    char* trace = trace_csv ? dup(gen.trace.to_csv()) : nullptr;
    *out = new ilm_graph{std::move(gen.graph)};
    if (trace_csv) *trace_csv = trace;
  });
}

uint64_t ilm_predict_edges(uint64_t n, uint64_t e, int bit) { return ilm::predict_edges(n, e, bit ? 1 : 0); }

ilm_status ilm_analyze(const ilm_graph* g, unsigned flags, char** json_out, int* inconclusive) {
  return guard([&] {
    need(g, "graph");
    need(json_out, "out");
    ilm::AnalyzeOptions opt;
    opt.metrics = flags & ILM_ANALYZE_METRICS;
    opt.params = flags & ILM_ANALYZE_PARAMS;
    opt.spectral = flags & ILM_ANALYZE_SPECTRAL;
    opt.structure = flags & ILM_ANALYZE_STRUCTURE;
    opt.per_generation = !(flags & ILM_ANALYZE_FINAL_ONLY);
    auto a = ilm::analyze(g->g, opt);
    *json_out = dup(a.json);
    if (inconclusive) *inconclusive = a.inconclusive ? 1 : 0;
  });
}

ilm_status ilm_corpus_builtin(ilm_corpus** out) {
  return guard([&] {
    need(out, "out");
    *out = new ilm_corpus{ilm::CorpusSpec::builtin()};
  });
}

ilm_status ilm_corpus_from_json(const char* text, ilm_corpus** out) {
  return guard([&] {
    need(text, "json");
    need(out, "out");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ilm::ParseError(std::string("corpus: ") + e.what());
    }
    *out = new ilm_corpus{ilm::CorpusSpec::from_json(j)};
  });
}

ilm_status ilm_corpus_to_json(const ilm_corpus* c, char** out) {
  return guard([&] {
    need(c, "corpus");
    need(out, "out");
    *out = dup(c->spec.to_json().dump(2) + "\n");
  });
}

ilm_status ilm_corpus_set_threads(ilm_corpus* c, size_t threads) {
  return guard([&] {
    need(c, "corpus");
    c->spec.threads = threads;
  });
}

ilm_status ilm_corpus_set_timings(ilm_corpus* c, int on) {
  return guard([&] {
    need(c, "corpus");
    c->spec.timings = on != 0;
  });
}

void ilm_corpus_free(ilm_corpus* c) { delete c; }

ilm_status ilm_campaign_run(const ilm_corpus* c, const char* theorems, ilm_report** out) {
  return guard([&] {
    need(c, "corpus");
    need(theorems, "theorems");
    need(out, "out");
    *out = new ilm_report{ilm::run_campaign(c->spec, ilm::parse_theorem_list(theorems))};
  });
}

ilm_status ilm_theorem_ids(char** out) {
  return guard([&] {
    need(out, "out");
    std::string s;
    for (const auto& id : ilm::theorem_ids()) s += (s.empty() ? "" : ",") + id;
    *out = dup(s);
  });
}

ilm_status ilm_report_export(const ilm_report* r, const char* format, char** out) {
  return guard([&] {
    need(r, "report");
    need(format, "format");
    need(out, "out");
    *out = dup(ilm::export_reports(r->rows, format));
  });
}

ilm_status ilm_report_summary(const ilm_report* r, ilm_summary* out) {
  return guard([&] {
    need(r, "report");
    need(out, "out");
    const auto s = ilm::summarize(r->rows);
    *out = {s.pass, s.fail, s.not_applicable, s.recorded_only, s.inconclusive};
  });
}

ilm_status ilm_report_from_json(const char* text, ilm_report** out) {
  return guard([&] {
    need(text, "json");
    need(out, "out");
    *out = new ilm_report{ilm::reports_from_json(text)};
  });
}

void ilm_report_free(ilm_report* r) { delete r; }

ilm_status ilm_export_plots(const ilm_corpus* c, const char* dir, char** files_out) {
  return guard([&] {
    need(c, "corpus");
    need(dir, "dir");
    std::string list;
    for (const auto& p : ilm::export_plot_series(c->spec, dir)) list += p.string() + "\n";
    if (files_out) *files_out = dup(list);
  });
}

}  // extern "C"
