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

// Graph machinery behind the classical impossibility argument: the graph of
// Bob's edges, its components, parity-constrained 2-colorings, and the
// all-cross perfect matching that rules out small components.

#ifndef MATCHGAME_COLORING_H_
#define MATCHGAME_COLORING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matchgame/bit_string.h"
#include "matchgame/matching.h"
#include "matchgame/strategy.h"

namespace matchgame {

/// Simple undirected graph on {0..vertex_count-1}. Edges are deduplicated and
/// sorted.
class Graph {
 public:
  /// Throws std::invalid_argument if an endpoint is out of range.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  std::span<const Edge> edges() const { return edges_; }
  /// Position of e in edges(), or nullopt.
  std::optional<std::size_t> edge_index(const Edge& e) const;
  std::span<const int> neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// h: E -> {0,1}, stored aligned with graph.edges().
class ParityFunction {
 public:
  /// Throws std::invalid_argument unless values.size() == number of edges and
  /// every value is 0 or 1.
  ParityFunction(const Graph& g, std::vector<int> values);

  std::span<const int> values() const { return values_; }
  int operator[](std::size_t edge_index) const { return values_.at(edge_index); }

  friend bool operator==(const ParityFunction&, const ParityFunction&) = default;

 private:
  std::vector<int> values_;
};

/// Vertex sets of the connected components, each sorted, listed by smallest
/// vertex. Isolated vertices are singletons.
std::vector<std::vector<int>> components(const Graph& g);

/// Shortest-path length, nullopt if v is unreachable from u. Throws
/// std::out_of_range for bad vertices.
std::optional<int> distance(const Graph& g, int u, int v);

/// log2 of the number of colorings c with c(u) ^ c(v) == h(uv) on every edge,
/// i.e. the component count, or nullopt if no coloring exists.
std::optional<int> coloring_exponent(const Graph& g, const ParityFunction& h);

/// 0 or 2^(components). Throws std::overflow_error if that exceeds 64 bits.
std::uint64_t count_colorings(const Graph& g, const ParityFunction& h);

/// h(uv) = r_u ^ r_v.
ParityFunction h_from_representative(const BitString& r, const Graph& g);

/// Every coloring as the string c(0)c(1)...c(V-1), sorted. Empty when the
/// graph is not colorable. Requires V <= 64.
std::vector<BitString> strings_from_colorings(const Graph& g, const ParityFunction& h);

/// The graph of every edge Bob ever answers under s.
Graph build_bob_graph(const DeterministicStrategy& s);

struct Lemma2Report {
  std::uint64_t alice_output = 0;  // the answer whose preimage is R
  std::uint64_t output_class_size = 0;
  std::uint64_t required_size = 0;  // 2^m / 2^n
  bool class_size_ok = false;
  int max_component_size = 0;
  int component_threshold = 0;  // m / 2; must be exceeded
  bool component_ok = false;
  bool parity_consistent = false;

  bool all_conditions() const { return class_size_ok && component_ok && parity_consistent; }
  /// key=value lines.
  std::string to_string(int output_width) const;
};

/// Takes R as the largest preimage class of Alice's table (ties go to the
/// numerically smallest answer) and checks each necessary condition for a
/// winning strategy separately.
Lemma2Report audit_lemma2(const DeterministicStrategy& s);

/// Error raised when a partition admits no all-cross matching under the
/// procedure's precondition.
class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Perfect matching whose every edge joins two different parts. Parts are
/// processed from the smallest up, each pairing its leftovers with the next
/// larger part; surplus vertices of the largest part are placed by breaking
/// pairs that do not touch it. Throws PartitionError if the parts do not
/// partition {0..m-1} for an even m, or some part has more than m/2 vertices.
PerfectMatching cross_component_matching(std::span<const std::vector<int>> partition);

struct ImpossibilityCertificate {
  int m = 0;
  int components_needed = 0;    // m - ceil(log2 m)
  int components_possible = 0;  // m / 2
  bool excluded = false;

  /// "excluded=<bool> needed=<k> possible=<k>".
  std::string to_string() const;
};

/// Arithmetic certificate that no graph meets both necessary conditions;
/// excluded exactly when m/2 < m - ceil(log2 m). Throws on odd or
/// non-positive m.
ImpossibilityCertificate theorem2_certificate(int m);

}  // namespace matchgame

#endif  // MATCHGAME_COLORING_H_
