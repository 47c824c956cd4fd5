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

#ifndef MATCHGAME_INSTANCE_H_
#define MATCHGAME_INSTANCE_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace matchgame {

/// ceil(log2(m)) for m >= 1.
int ceil_log2(std::uint64_t m);

/// The matching game on inputs of size m (even, 2 <= m <= 64). Alice answers
/// with output_width() = ceil(log2 m) bits.
class GameInstance {
 public:
  static constexpr int kMaxInputSize = 64;

  /// Throws std::invalid_argument if m is odd or outside [2, 64].
  explicit GameInstance(int m);

  int input_size() const { return m_; }
  int output_width() const { return n_; }
  std::uint64_t alice_input_count() const { return std::uint64_t{1} << m_; }
  std::uint64_t output_count() const { return std::uint64_t{1} << n_; }

  friend bool operator==(const GameInstance&, const GameInstance&) = default;

 private:
  int m_;
  int n_;
};

/// Unordered pair {lo, hi} of distinct vertices, stored with lo < hi.
struct Edge {
  int lo = 0;
  int hi = 0;

  /// Normalizes the order; throws std::invalid_argument if i == j or either
  /// is negative.
  static Edge of(int i, int j);
  /// Parses "i-j" (either order accepted, normalized).
  static Edge parse(std::string_view text);

  bool contains(int v) const { return lo == v || hi == v; }
  std::string to_string() const;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend std::strong_ordering operator<=>(const Edge&, const Edge&) = default;
};

}  // namespace matchgame

#endif  // MATCHGAME_INSTANCE_H_
