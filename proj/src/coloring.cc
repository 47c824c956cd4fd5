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

#include "matchgame/coloring.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace matchgame {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (const Edge& e : edges_) {
    if (e.lo < 0 || e.hi >= vertex_count || e.lo >= e.hi) {
      throw std::invalid_argument("edge " + e.to_string() + " is not a valid edge on " + std::to_string(vertex_count) +
                                  " vertices");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.lo)].push_back(e.hi);
    adjacency_[static_cast<std::size_t>(e.hi)].push_back(e.lo);
  }
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

ParityFunction::ParityFunction(const Graph& g, std::vector<int> values) : values_(std::move(values)) {
  if (values_.size() != g.edges().size()) {
    throw std::invalid_argument("parity function must assign a bit to each of the " +
                                std::to_string(g.edges().size()) + " edges");
  }
  for (int v : values_) {
    if (v != 0 && v != 1) throw std::invalid_argument("parity values must be 0 or 1");
  }
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<int> comp{s};
    label[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int w : g.neighbors(comp[head])) {
        if (label[static_cast<std::size_t>(w)] == -1) {
          label[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  const int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("vertex outside the graph");
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::deque<int> queue{u};
  dist[static_cast<std::size_t>(u)] = 0;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    if (a == v) return dist[static_cast<std::size_t>(a)];
    for (int b : g.neighbors(a)) {
      if (dist[static_cast<std::size_t>(b)] == -1) {
        dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
        queue.push_back(b);
      }
    }
  }
  return std::nullopt;
}

namespace {

// Union-find where each node also stores the parity of its color relative to
// its parent.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(static_cast<std::size_t>(n)), parity_(static_cast<std::size_t>(n), 0),
                                    size_(static_cast<std::size_t>(n), 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Returns (root, parity of v relative to root).
  std::pair<int, int> find(int v) {
    int p = 0;
    int root = v;
    while (parent_[static_cast<std::size_t>(root)] != root) {
      p ^= parity_[static_cast<std::size_t>(root)];
      root = parent_[static_cast<std::size_t>(root)];
    }
    // Path compression, rewriting parities along the way.
    int acc = p;
    while (parent_[static_cast<std::size_t>(v)] != v) {
      int next = parent_[static_cast<std::size_t>(v)];
      int step = parity_[static_cast<std::size_t>(v)];
      parent_[static_cast<std::size_t>(v)] = root;
      parity_[static_cast<std::size_t>(v)] = acc;
      acc ^= step;
      v = next;
    }
    return {root, p};
  }

  // Imposes color(u) ^ color(v) == h. Returns false on contradiction.
  bool unite(int u, int v, int h) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) return (pu ^ pv) == h;
    if (size_[static_cast<std::size_t>(ru)] < size_[static_cast<std::size_t>(rv)]) std::swap(ru, rv);
    parent_[static_cast<std::size_t>(rv)] = ru;
    parity_[static_cast<std::size_t>(rv)] = pu ^ pv ^ h;
    size_[static_cast<std::size_t>(ru)] += size_[static_cast<std::size_t>(rv)];
    --sets_;
    return true;
  }

  int set_count() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
  std::vector<int> size_;
  int sets_;
};

}  // namespace

std::optional<int> coloring_exponent(const Graph& g, const ParityFunction& h) {
  ParityUnionFind uf(g.vertex_count());
  auto edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!uf.unite(edges[k].lo, edges[k].hi, h[k])) return std::nullopt;
  }
  return uf.set_count();
}

std::uint64_t count_colorings(const Graph& g, const ParityFunction& h) {
  auto k = coloring_exponent(g, h);
  if (!k) return 0;
  if (*k >= 64) throw std::overflow_error("2^" + std::to_string(*k) + " colorings do not fit in 64 bits");
  return std::uint64_t{1} << *k;
}

ParityFunction h_from_representative(const BitString& r, const Graph& g) {
  if (r.width() != g.vertex_count()) {
    throw std::invalid_argument("representative has " + std::to_string(r.width()) + " bits, graph has " +
                                std::to_string(g.vertex_count()) + " vertices");
  }
  std::vector<int> values;
  values.reserve(g.edges().size());
  for (const Edge& e : g.edges()) values.push_back(r.bit(e.lo) ^ r.bit(e.hi));
  return ParityFunction(g, std::move(values));
}

std::vector<BitString> strings_from_colorings(const Graph& g, const ParityFunction& h) {
  const int n = g.vertex_count();
  if (n < 1 || n > BitString::kMaxWidth) throw std::invalid_argument("colorings are materialized for 1..64 vertices");
  if (!coloring_exponent(g, h)) return {};

  // Color each component relative to its smallest vertex.
  auto comps = components(g);
  std::vector<int> relative(static_cast<std::size_t>(n), -1);
  std::vector<std::uint64_t> comp_mask(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::vector<int> stack{comps[c].front()};
    relative[static_cast<std::size_t>(comps[c].front())] = 0;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : g.neighbors(a)) {
        if (relative[static_cast<std::size_t>(b)] != -1) continue;
        int hb = h[*g.edge_index(Edge::of(a, b))];
        relative[static_cast<std::size_t>(b)] = relative[static_cast<std::size_t>(a)] ^ hb;
        stack.push_back(b);
      }
    }
    for (int v : comps[c]) comp_mask[c] |= std::uint64_t{1} << (n - 1 - v);
  }
  std::uint64_t base = 0;
  for (int v = 0; v < n; ++v) {
    if (relative[static_cast<std::size_t>(v)]) base |= std::uint64_t{1} << (n - 1 - v);
  }
  if (comps.size() > 30) throw std::overflow_error("too many colorings to materialize");
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << comps.size());
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << comps.size()); ++choice) {
    std::uint64_t word = base;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if ((choice >> c) & 1) word ^= comp_mask[c];
    }
    out.emplace_back(n, word);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph build_bob_graph(const DeterministicStrategy& s) {
  std::vector<Edge> edges;
  for (const BobEntry& e : s.bob_table()) edges.push_back(e.edge);
  return Graph(s.instance().input_size(), std::move(edges));
}

std::string Lemma2Report::to_string(int output_width) const {
  auto yes_no = [](bool b) { return b ? "true" : "false"; };
  std::string out;
  out += "alice_output=" + BitString(output_width, alice_output).to_string() + "\n";
  out += "class_size=" + std::to_string(output_class_size) + "\n";
  out += "required_size=" + std::to_string(required_size) + "\n";
  out += "class_size_ok=" + std::string(yes_no(class_size_ok)) + "\n";
  out += "max_component=" + std::to_string(max_component_size) + "\n";
  out += "component_threshold=" + std::to_string(component_threshold) + "\n";
  out += "component_ok=" + std::string(yes_no(component_ok)) + "\n";
  out += "parity_consistent=" + std::string(yes_no(parity_consistent)) + "\n";
  return out;
}

Lemma2Report audit_lemma2(const DeterministicStrategy& s) {
  const GameInstance& inst = s.instance();
  const int m = inst.input_size();
  Lemma2Report report;

  std::vector<std::uint64_t> class_size(inst.output_count(), 0);
  for (std::uint64_t a : s.alice_table()) ++class_size[a];
  auto largest = std::max_element(class_size.begin(), class_size.end());
  report.alice_output = static_cast<std::uint64_t>(largest - class_size.begin());
  report.output_class_size = *largest;
  report.required_size = std::uint64_t{1} << (m - inst.output_width());
  report.class_size_ok = report.output_class_size >= report.required_size;

  Graph g = build_bob_graph(s);
  for (const auto& comp : components(g)) {
    report.max_component_size = std::max(report.max_component_size, static_cast<int>(comp.size()));
  }
  report.component_threshold = m / 2;
  report.component_ok = report.max_component_size > report.component_threshold;

  // Each edge's parity must be the same across every x in R.
  std::vector<int> seen(g.edges().size(), -1);
  report.parity_consistent = true;
  auto alice = s.alice_table();
  for (std::uint64_t x = 0; x < alice.size() && report.parity_consistent; ++x) {
    if (alice[x] != report.alice_output) continue;
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
      const Edge& e = g.edges()[k];
      int p = static_cast<int>(((x >> (m - 1 - e.lo)) ^ (x >> (m - 1 - e.hi))) & 1);
      if (seen[k] == -1) {
        seen[k] = p;
      } else if (seen[k] != p) {
        report.parity_consistent = false;
        break;
      }
    }
  }
  return report;
}

PerfectMatching cross_component_matching(std::span<const std::vector<int>> partition) {
  int m = 0;
  for (const auto& part : partition) m += static_cast<int>(part.size());
  if (m == 0 || m % 2 != 0) throw PartitionError("partition must cover an even, positive number of vertices");
  std::vector<int> owner(static_cast<std::size_t>(m), -1);
  for (std::size_t c = 0; c < partition.size(); ++c) {
    if (partition[c].empty()) throw PartitionError("partition contains an empty part");
    for (int v : partition[c]) {
      if (v < 0 || v >= m) throw PartitionError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(m - 1));
      if (owner[static_cast<std::size_t>(v)] != -1) throw PartitionError("vertex " + std::to_string(v) + " repeated");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    if (2 * static_cast<int>(partition[c].size()) > m) {
      throw PartitionError("a part of size " + std::to_string(partition[c].size()) + " exceeds m/2 = " +
                           std::to_string(m / 2));
    }
  }

  // Non-increasing size; equal sizes ordered by smallest vertex.
  std::vector<std::vector<int>> parts(partition.begin(), partition.end());
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });

  std::vector<std::size_t> next(parts.size(), 0);  // first unmatched position per part
  std::vector<std::pair<int, int>> pairs;          // (vertex of smaller part, vertex of larger part)
  for (std::size_t j = parts.size(); j-- > 1;) {
    while (next[j] < parts[j].size()) {
      // parts[j-1] is untouched before this step and at least as large.
      pairs.emplace_back(parts[j][next[j]++], parts[j - 1][next[j - 1]++]);
    }
  }

  std::vector<int> leftovers(parts[0].begin() + static_cast<std::ptrdiff_t>(next[0]), parts[0].end());
  if (!leftovers.empty()) {
    // Break the most recently added pairs that avoid the largest part; each
    // freed endpoint is matched with one leftover.
    std::vector<bool> in_largest(static_cast<std::size_t>(m), false);
    for (int v : parts[0]) in_largest[static_cast<std::size_t>(v)] = true;
    std::size_t needed = leftovers.size() / 2;
    std::vector<std::size_t> removed;
    for (std::size_t k = pairs.size(); k-- > 0 && removed.size() < needed;) {
      if (!in_largest[static_cast<std::size_t>(pairs[k].first)] &&
          !in_largest[static_cast<std::size_t>(pairs[k].second)]) {
        removed.push_back(k);
      }
    }
    std::sort(removed.begin(), removed.end());
    std::size_t l = 0;
    for (std::size_t k : removed) {
      auto [u, v] = pairs[k];
      pairs[k] = {u, leftovers[l++]};
      pairs.emplace_back(v, leftovers[l++]);
    }
  }
  return validate_matching(pairs, m);
}

std::string ImpossibilityCertificate::to_string() const {
  return std::string("excluded=") + (excluded ? "true" : "false") + " needed=" + std::to_string(components_needed) +
         " possible=" + std::to_string(components_possible);
}

ImpossibilityCertificate theorem2_certificate(int m) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("certificate needs an even m >= 2, got " + std::to_string(m));
  ImpossibilityCertificate cert;
  cert.m = m;
  cert.components_needed = m - ceil_log2(static_cast<std::uint64_t>(m));
  cert.components_possible = m / 2;
  cert.excluded = cert.components_possible < cert.components_needed;
  return cert;
}

}  // namespace matchgame
