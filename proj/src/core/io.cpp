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

#include "ilm/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ilm/error.hpp"

namespace ilm {

namespace {

const char* kind_name(Origin o) {
  switch (o) {
    case Origin::Original: return "original";
    case Origin::TransitiveClone: return "transitive";
    case Origin::AntiClone: return "anti";
  }
  return "original";
}

Origin kind_from_name(const std::string& s) {
  if (s == "original") return Origin::Original;
  if (s == "transitive") return Origin::TransitiveClone;
  if (s == "anti") return Origin::AntiClone;
  throw ParseError("unknown lineage kind '" + s + "'");
}

class Tokens {
 public:
  explicit Tokens(std::string_view text) : text_(text) {}

  bool next(std::uint64_t& out) {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' || text_[pos_] == '\n'))
      ++pos_;
    if (pos_ >= text_.size()) return false;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), out);
    if (ec != std::errc()) throw ParseError("edge list: expected an unsigned integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return true;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  out.reserve(out.size() + g.size() * 12);
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  Tokens tok(text);
  std::uint64_t n = 0, m = 0;
  if (!tok.next(n) || !tok.next(m)) throw ParseError("edge list: missing 'n m' header");
  if (n > max_vertices()) throw CapacityError("edge list order " + std::to_string(n) + " exceeds vertex cap");
  GraphBuilder b(n);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t u = 0, v = 0;
    if (!tok.next(u) || !tok.next(v)) throw ParseError("edge list: fewer edges than declared");
    if (u >= n || v >= n) throw ParseError("edge list: endpoint out of range");
    if (u == v) throw ParseError("edge list: self-loop");
    if (bits::test(b.row_data(static_cast<VertexId>(u)), v)) throw ParseError("edge list: duplicate edge");
    b.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  std::uint64_t extra = 0;
  if (tok.next(extra)) throw ParseError("edge list: trailing data after declared edges");
  return std::move(b).build();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    const Lineage& l = g.lineage(v);
    os << "  " << v << " [label=\"" << v << "\"";
    if (l.origin == Origin::TransitiveClone) os << ", shape=box";
    if (l.origin == Origin::AntiClone) os << ", shape=diamond";
    os << "];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_lineage_json(const Graph& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (VertexId v = 0; v < g.order(); ++v) {
    const Lineage& l = g.lineage(v);
    nlohmann::json e;
    e["id"] = v;
    e["kind"] = kind_name(l.origin);
    e["parent"] = l.origin == Origin::Original ? nlohmann::json(nullptr) : nlohmann::json(l.parent);
    e["step"] = l.step;
    arr.push_back(std::move(e));
  }
  return arr.dump() + "\n";
}

Graph with_lineage(const Graph& g, std::string_view lineage_json) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(lineage_json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("lineage sidecar: ") + e.what());
  }
  if (!arr.is_array() || arr.size() != g.order()) throw ParseError("lineage sidecar: length does not match graph order");
  GraphBuilder b(g.order());
  std::uint32_t gen = 0;
  try {
    for (VertexId v = 0; v < g.order(); ++v) {
      const auto& e = arr[v];
      if (e.at("id").get<VertexId>() != v) throw ParseError("lineage sidecar: ids must be 0..n-1 in order");
      Lineage l;
      l.origin = kind_from_name(e.at("kind").get<std::string>());
      l.step = e.at("step").get<std::uint32_t>();
      l.parent = l.origin == Origin::Original ? v : e.at("parent").get<VertexId>();
      b.set_lineage(v, l);
      gen = std::max(gen, l.step);
      auto dst = b.row_data(v);
      std::copy_n(g.row(v).begin(), dst.size(), dst.begin());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("lineage sidecar: ") + e.what());
  }
  b.set_generation(gen);
  try {
    return std::move(b).build();
  } catch (const UsageError& e) {
    throw ParseError(std::string("lineage sidecar: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot open '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, std::string_view contents) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + p.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write failed for '" + p.string() + "'");
}

std::filesystem::path lineage_path(const std::filesystem::path& edge_list) {
  return std::filesystem::path(edge_list.string() + ".lineage.json");
}

Graph load_graph(const std::filesystem::path& p) {
  Graph g = parse_edge_list(read_file(p));
  const auto side = lineage_path(p);
  if (std::filesystem::exists(side)) g = with_lineage(g, read_file(side));
  return g;
}

void save_graph(const Graph& g, const std::filesystem::path& p) {
  write_file(p, to_edge_list(g));
  write_file(lineage_path(p), to_lineage_json(g));
}

}  // namespace ilm
