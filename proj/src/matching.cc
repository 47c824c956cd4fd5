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

#include "matchgame/matching.h"

#include <algorithm>
#include <limits>

namespace matchgame {

bool PerfectMatching::contains(const Edge& e) const {
  return e.lo >= 0 && e.hi < vertex_count() && partner_[static_cast<size_t>(e.lo)] == e.hi;
}

std::string PerfectMatching::to_string() const {
  std::string out;
  for (const Edge& e : edges_) {
    if (!out.empty()) out += ',';
    out += e.to_string();
  }
  return out;
}

PerfectMatching validate_matching(std::span<const std::pair<int, int>> pairs, int vertex_count) {
  using Kind = MatchingError::Kind;
  if (vertex_count < 2 || vertex_count % 2 != 0) {
    throw std::invalid_argument("perfect matchings need an even vertex count >= 2");
  }
  PerfectMatching y;
  y.partner_.assign(static_cast<size_t>(vertex_count), -1);
  for (auto [i, j] : pairs) {
    if (i == j) throw MatchingError(Kind::kSelfPair, "vertex " + std::to_string(i) + " is paired with itself");
    for (int v : {i, j}) {
      if (v < 0 || v >= vertex_count) {
        throw MatchingError(Kind::kOutOfRange, "vertex " + std::to_string(v) + " is outside 0.." +
                                                   std::to_string(vertex_count - 1));
      }
    }
    for (int v : {i, j}) {
      if (y.partner_[static_cast<size_t>(v)] != -1) {
        throw MatchingError(Kind::kOverlap, "vertex " + std::to_string(v) + " appears in more than one pair");
      }
    }
    y.partner_[static_cast<size_t>(i)] = j;
    y.partner_[static_cast<size_t>(j)] = i;
    y.edges_.push_back(Edge::of(i, j));
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (y.partner_[static_cast<size_t>(v)] == -1) {
      throw MatchingError(Kind::kMissingVertex, "vertex " + std::to_string(v) + " is not covered");
    }
  }
  std::sort(y.edges_.begin(), y.edges_.end());
  return y;
}

PerfectMatching validate_matching(std::span<const std::pair<int, int>> pairs, const GameInstance& inst) {
  return validate_matching(pairs, inst.input_size());
}

PerfectMatching parse_matching(std::string_view text, const GameInstance& inst) {
  std::vector<std::pair<int, int>> pairs;
  while (!text.empty()) {
    auto comma = text.find(',');
    Edge e = Edge::parse(text.substr(0, comma));
    pairs.emplace_back(e.lo, e.hi);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw std::invalid_argument("trailing comma in matching");
  }
  return validate_matching(pairs, inst);
}

bool contains_edge(const PerfectMatching& y, const Edge& e) { return y.contains(e); }

std::uint64_t matching_count(int m) {
  if (m < 0 || m % 2 != 0) throw std::invalid_argument("matching_count needs an even m >= 0");
  std::uint64_t c = 1;
  for (int k = m - 1; k > 1; k -= 2) {
    if (c > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k)) {
      throw std::overflow_error("(m-1)!! overflows 64 bits for m = " + std::to_string(m));
    }
    c *= static_cast<std::uint64_t>(k);
  }
  return c;
}

namespace {

void enumerate_rec(std::vector<int>& remaining, std::vector<std::pair<int, int>>& current, int m,
                   std::vector<PerfectMatching>& out) {
  if (remaining.empty()) {
    out.push_back(validate_matching(current, m));
    return;
  }
  int u = remaining.front();
  for (size_t c = 1; c < remaining.size(); ++c) {
    int v = remaining[c];
    std::vector<int> rest;
    rest.reserve(remaining.size() - 2);
    for (size_t k = 1; k < remaining.size(); ++k) {
      if (k != c) rest.push_back(remaining[k]);
    }
    current.emplace_back(u, v);
    enumerate_rec(rest, current, m, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<PerfectMatching> enumerate_matchings(const GameInstance& inst) {
  int m = inst.input_size();
  std::vector<PerfectMatching> out;
  out.reserve(matching_count(m));
  std::vector<int> remaining(static_cast<size_t>(m));
  for (int v = 0; v < m; ++v) remaining[static_cast<size_t>(v)] = v;
  std::vector<std::pair<int, int>> current;
  enumerate_rec(remaining, current, m, out);
  return out;
}

std::uint64_t matching_rank(const PerfectMatching& y) {
  int m = y.vertex_count();
  std::vector<int> remaining(static_cast<size_t>(m));
  for (int v = 0; v < m; ++v) remaining[static_cast<size_t>(v)] = v;
  std::uint64_t rank = 0;
  while (!remaining.empty()) {
    int r = static_cast<int>(remaining.size());
    int u = remaining.front();
    auto it = std::find(remaining.begin() + 1, remaining.end(), y.partner(u));
    auto choice = static_cast<std::uint64_t>(it - remaining.begin() - 1);
    rank += choice * matching_count(r - 2);
    remaining.erase(it);
    remaining.erase(remaining.begin());
  }
  return rank;
}

PerfectMatching matching_unrank(int m, std::uint64_t rank) {
  if (rank >= matching_count(m)) {
    throw std::out_of_range("matching rank " + std::to_string(rank) + " out of range for m = " + std::to_string(m));
  }
  std::vector<int> remaining(static_cast<size_t>(m));
  for (int v = 0; v < m; ++v) remaining[static_cast<size_t>(v)] = v;
  std::vector<std::pair<int, int>> pairs;
  while (!remaining.empty()) {
    std::uint64_t block = matching_count(static_cast<int>(remaining.size()) - 2);
    auto choice = static_cast<std::ptrdiff_t>(rank / block);
    rank %= block;
    auto it = remaining.begin() + 1 + choice;
    pairs.emplace_back(remaining.front(), *it);
    remaining.erase(it);
    remaining.erase(remaining.begin());
  }
  return validate_matching(pairs, m);
}

}  // namespace matchgame
