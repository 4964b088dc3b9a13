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

#include "ilm/named.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "ilm/error.hpp"

namespace ilm {

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw UsageError("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (VertexId v = 0; v < n; ++v) b.add_edge(v, static_cast<VertexId>((v + 1) % n));
  return std::move(b).build();
}

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (VertexId v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder g(a + b);
  for (VertexId u = 0; u < a; ++u)
    for (VertexId v = 0; v < b; ++v) g.add_edge(u, static_cast<VertexId>(a + v));
  return std::move(g).build();
}

Graph petersen_graph() {
  GraphBuilder b(10);
  for (VertexId i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t na = a.order();
  GraphBuilder u(na + b.order());
  for (auto [x, y] : a.edges()) u.add_edge(x, y);
  for (auto [x, y] : b.edges()) u.add_edge(static_cast<VertexId>(na + x), static_cast<VertexId>(na + y));
  return std::move(u).build();
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  // Compare raw 53-bit draws against p so the graph depends only on the seed.
  const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);
  GraphBuilder b(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if ((rng() >> 11) < threshold) b.add_edge(u, v);
  return std::move(b).build();
}

namespace {

std::size_t parse_count(const std::string& s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("bad graph name '" + std::string(whole) + "'");
  return static_cast<std::size_t>(std::stoull(s));
}

Graph parse_term(std::string term, std::string_view whole) {
  std::size_t i = 0;
  while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
  std::size_t copies = 1;
  if (i > 0) {
    copies = parse_count(term.substr(0, i), whole);
    term = term.substr(i);
  }
  if (term.empty() || copies == 0) throw ParseError("bad graph name '" + std::string(whole) + "'");

  Graph base;
  std::string lower = term;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "petersen") {
    base = petersen_graph();
  } else if (lower.rfind("g(", 0) == 0 && lower.back() == ')') {
    const std::string args = lower.substr(2, lower.size() - 3);
    const auto c1 = args.find(',');
    const auto c2 = args.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw ParseError("random graph needs G(n,p,seed)");
    const std::size_t n = parse_count(args.substr(0, c1), whole);
    double p = 0;
    try {
      p = std::stod(args.substr(c1 + 1, c2 - c1 - 1));
    } catch (const std::exception&) {
      throw ParseError("bad edge probability in '" + std::string(whole) + "'");
    }
    base = random_graph(n, p, parse_count(args.substr(c2 + 1), whole));
  } else {
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(term[0])));
    const std::string rest = term.substr(1);
    const auto comma = rest.find(',');
    if (kind == 'K' && comma != std::string::npos) {
      base = complete_bipartite(parse_count(rest.substr(0, comma), whole), parse_count(rest.substr(comma + 1), whole));
    } else {
      const std::size_t n = parse_count(rest, whole);
      switch (kind) {
        case 'K': base = complete_graph(n); break;
        case 'C': base = cycle_graph(n); break;
        case 'P': base = path_graph(n); break;
        case 'E': base = empty_graph(n); break;
        default: throw ParseError("unknown graph family in '" + std::string(whole) + "'");
      }
    }
  }
  Graph out = base;
  for (std::size_t c = 1; c < copies; ++c) out = disjoint_union(out, base);
  return out;
}

}  // namespace

Graph graph_from_name(std::string_view name) {
  std::string s;
  for (char c : name)
    if (c != '_' && c != '{' && c != '}' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty graph name");

  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == 'u' || c == 'U')) {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  terms.push_back(cur);

  Graph out = parse_term(terms.front(), name);
  for (std::size_t i = 1; i < terms.size(); ++i) out = disjoint_union(out, parse_term(terms[i], name));
  return out;
}

}  // namespace ilm
