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

#ifndef MATCHGAME_MATCHING_H_
#define MATCHGAME_MATCHING_H_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchgame/instance.h"

namespace matchgame {

class MatchingError : public std::invalid_argument {
 public:
  enum class Kind { kOverlap, kMissingVertex, kSelfPair, kOutOfRange };

  MatchingError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A partition of {0..m-1} into m/2 pairs. Edges are kept sorted by their
/// smaller endpoint, which makes equal matchings compare equal.
class PerfectMatching {
 public:
  int vertex_count() const { return static_cast<int>(partner_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  int partner(int v) const { return partner_.at(static_cast<size_t>(v)); }
  bool contains(const Edge& e) const;

  /// "0-1,2-3" form: edges sorted by smaller endpoint, comma separated.
  std::string to_string() const;

  friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) { return a.edges_ == b.edges_; }
  friend std::strong_ordering operator<=>(const PerfectMatching& a, const PerfectMatching& b) {
    return a.edges_ <=> b.edges_;
  }

 private:
  friend PerfectMatching validate_matching(std::span<const std::pair<int, int>> pairs, const GameInstance& inst);
  friend PerfectMatching validate_matching(std::span<const std::pair<int, int>> pairs, int vertex_count);

  std::vector<Edge> edges_;
  std::vector<int> partner_;
};

/// Builds a matching iff the pairs partition {0..m-1}; otherwise throws
/// MatchingError naming the first violation found (self-pair, out-of-range,
/// overlap, then missing vertex).
PerfectMatching validate_matching(std::span<const std::pair<int, int>> pairs, const GameInstance& inst);
/// Same check against an arbitrary even vertex count (used by graph code).
PerfectMatching validate_matching(std::span<const std::pair<int, int>> pairs, int vertex_count);

/// Parses the "i-j,k-l,..." form. Edge order in the text is free.
PerfectMatching parse_matching(std::string_view text, const GameInstance& inst);

bool contains_edge(const PerfectMatching& y, const Edge& e);

/// (m-1)!! = |M_m| for even m. Throws if m is odd or the count overflows.
std::uint64_t matching_count(int m);

/// Every perfect matching on {0..m-1} exactly once, in canonical order: the
/// lowest unmatched vertex is paired with each larger unmatched vertex in
/// increasing order, recursively.
std::vector<PerfectMatching> enumerate_matchings(const GameInstance& inst);

/// Position of y in the canonical enumeration, computed without enumerating.
std::uint64_t matching_rank(const PerfectMatching& y);
/// Inverse of matching_rank.
PerfectMatching matching_unrank(int m, std::uint64_t rank);

}  // namespace matchgame

#endif  // MATCHGAME_MATCHING_H_
