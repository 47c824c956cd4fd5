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

// Brute-force reference computations used only by tests. None of these call
// into the library's algorithms; they work on plain strings and vectors.

#ifndef MATCHGAME_TESTS_ORACLES_H_
#define MATCHGAME_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<int, int>;
using Pairing = std::vector<Pair>;

/// Width of Alice's answer: smallest n with 2^n >= m.
inline int width_for(int m) {
  int n = 0;
  while ((1 << n) < m) ++n;
  return n;
}

/// Big-endian binary of i, padded to `width` characters.
inline std::string binary(int i, int width) {
  std::string s(static_cast<size_t>(width), '0');
  for (int k = width - 1; k >= 0; --k, i >>= 1) s[static_cast<size_t>(k)] = static_cast<char>('0' + (i & 1));
  return s;
}

/// The winning condition evaluated character by character on strings.
inline bool wins(const std::string& x, const Pairing& y, Pair edge, const std::string& a, const std::string& b2) {
  bool in_y = false;
  for (auto [u, v] : y) {
    if ((u == edge.first && v == edge.second) || (u == edge.second && v == edge.first)) in_y = true;
  }
  if (!in_y) return false;
  int width = static_cast<int>(a.size());
  std::string bi = binary(edge.first, width);
  std::string bj = binary(edge.second, width);
  int rhs = 0;
  for (int k = 0; k < width; ++k) {
    int d = (bi[static_cast<size_t>(k)] != bj[static_cast<size_t>(k)]) ? 1 : 0;
    int s = (a[static_cast<size_t>(k)] != b2[static_cast<size_t>(k)]) ? 1 : 0;
    rhs ^= d & s;
  }
  int lhs = (x[static_cast<size_t>(edge.first)] - '0') ^ (x[static_cast<size_t>(edge.second)] - '0');
  return lhs == rhs;
}

/// Every set of m/2 disjoint pairs drawn from all pairs of {0..m-1}, found by
/// choosing subsets of the complete edge list. Feasible for m <= 8.
inline std::set<Pairing> all_pairings_by_subsets(int m) {
  std::vector<Pair> all;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) all.emplace_back(i, j);
  std::set<Pairing> out;
  const int k = m / 2;
  std::vector<int> pick(static_cast<size_t>(k));
  // Iterate over k-combinations of `all` in lexicographic index order.
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  const int total = static_cast<int>(all.size());
  while (true) {
    std::vector<int> used(static_cast<size_t>(m), 0);
    bool ok = true;
    Pairing p;
    for (int idx : pick) {
      auto e = all[static_cast<size_t>(idx)];
      if (used[static_cast<size_t>(e.first)]++ || used[static_cast<size_t>(e.second)]++) ok = false;
      p.push_back(e);
    }
    if (ok) out.insert(p);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == total - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

/// Number of perfect matchings of the vertex set `mask`, by memoized recursion
/// on the lowest vertex.
inline std::uint64_t count_pairings(std::uint32_t mask, std::map<std::uint32_t, std::uint64_t>& memo) {
  if (mask == 0) return 1;
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  int low = __builtin_ctz(mask);
  std::uint64_t c = 0;
  for (int v = low + 1; v < 32; ++v) {
    if (mask & (1u << v)) c += count_pairings(mask & ~(1u << low) & ~(1u << v), memo);
  }
  memo[mask] = c;
  return c;
}

/// Counts colorings c in {0,1}^V with c_u ^ c_v == h on every edge by trying
/// every assignment.
inline std::uint64_t count_colorings(int vertices, const std::vector<Pair>& edges, const std::vector<int>& h) {
  std::uint64_t count = 0;
  for (std::uint32_t c = 0; c < (1u << vertices); ++c) {
    bool ok = true;
    for (size_t k = 0; k < edges.size() && ok; ++k) {
      int cu = (c >> edges[k].first) & 1;
      int cv = (c >> edges[k].second) & 1;
      ok = ((cu ^ cv) == h[k]);
    }
    if (ok) ++count;
  }
  return count;
}

/// All colorings as strings c(0)c(1)...c(V-1).
inline std::set<std::string> coloring_strings(int vertices, const std::vector<Pair>& edges, const std::vector<int>& h) {
  std::set<std::string> out;
  for (std::uint32_t c = 0; c < (1u << vertices); ++c) {
    bool ok = true;
    for (size_t k = 0; k < edges.size() && ok; ++k) {
      ok = ((((c >> edges[k].first) ^ (c >> edges[k].second)) & 1) == static_cast<std::uint32_t>(h[k]));
    }
    if (!ok) continue;
    std::string s;
    for (int v = 0; v < vertices; ++v) s += static_cast<char>('0' + ((c >> v) & 1));
    out.insert(s);
  }
  return out;
}

/// Whether some perfect matching joins only vertices with different labels.
inline bool all_cross_matching_exists(std::vector<int> label) {
  std::vector<bool> used(label.size(), false);
  auto rec = [&](auto&& self) -> bool {
    size_t u = 0;
    while (u < label.size() && used[u]) ++u;
    if (u == label.size()) return true;
    used[u] = true;
    for (size_t v = u + 1; v < label.size(); ++v) {
      if (used[v] || label[v] == label[u]) continue;
      used[v] = true;
      if (self(self)) return true;
      used[v] = false;
    }
    used[u] = false;
    return false;
  };
  return rec(rec);
}

/// All integer partitions of n with parts <= max_part, parts non-increasing.
inline std::vector<std::vector<int>> integer_partitions(int n, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, max_part);
  return out;
}

}  // namespace oracle

#endif  // MATCHGAME_TESTS_ORACLES_H_
