// Copyright 2026 The Matchgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "matchgame/graph_io.h"

#include <charconv>
#include <map>
#include <optional>
#include <vector>

namespace matchgame {

std::string serialize_graph(const Graph& g, const ParityFunction& h) {
  std::string out = "graph n=" + std::to_string(g.vertex_count()) + "\n";
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    out += "edge " + g.edges()[k].to_string() + " h=" + std::to_string(h[k]) + "\n";
  }
  return out;
}

namespace {

// Value of a "key=<int>" token, or nullopt if the token has another shape.
std::optional<int> keyed_int(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) return std::nullopt;
  std::string_view digits = token.substr(key.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

}  // namespace

std::pair<Graph, ParityFunction> parse_graph(std::string_view text) {
  std::optional<int> vertices;
  std::map<Edge, int> parity;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    // Split on blanks, remembering 1-based columns.
    std::vector<std::pair<std::string_view, int>> toks;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) toks.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
    }
    if (toks.empty()) continue;
    const int end_col = static_cast<int>(line.size()) + 1;

    auto [head, head_col] = toks[0];
    if (head == "graph") {
      if (vertices) throw ParseError(line_no, head_col, "duplicate graph header");
      if (toks.size() != 2) {
        throw ParseError(line_no, toks.size() > 2 ? toks[2].second : end_col, "expected 'graph n=<count>'");
      }
      auto n = keyed_int(toks[1].first, "n=");
      if (!n || *n < 1 || *n > 64) {
        throw ParseError(line_no, toks[1].second, "expected n=<count> with 1 <= count <= 64");
      }
      vertices = *n;
    } else if (head == "edge") {
      if (!vertices) throw ParseError(line_no, head_col, "edge before 'graph n=<count>' header");
      if (toks.size() != 3) {
        throw ParseError(line_no, toks.size() > 3 ? toks[3].second : end_col, "expected 'edge i-j h=<0|1>'");
      }
      Edge e;
      try {
        e = Edge::parse(toks[1].first);
      } catch (const std::exception& ex) {
        throw ParseError(line_no, toks[1].second, std::string("bad edge: ") + ex.what());
      }
      if (e.hi >= *vertices) throw ParseError(line_no, toks[1].second, "endpoint out of range");
      auto h = keyed_int(toks[2].first, "h=");
      if (!h || (*h != 0 && *h != 1)) throw ParseError(line_no, toks[2].second, "expected h=0 or h=1");
      if (!parity.emplace(e, *h).second) throw ParseError(line_no, toks[1].second, "duplicate edge " + e.to_string());
    } else {
      throw ParseError(line_no, head_col, "unknown line type '" + std::string(head) + "'");
    }
  }
  if (!vertices) throw ParseError(line_no, 1, "missing 'graph n=<count>' header");

  std::vector<Edge> edges;
  for (const auto& [e, h] : parity) edges.push_back(e);
  Graph g(*vertices, edges);
  std::vector<int> values(g.edges().size());
  for (const auto& [e, h] : parity) values[*g.edge_index(e)] = h;
  ParityFunction f(g, std::move(values));
  return {std::move(g), std::move(f)};
}

}  // namespace matchgame
