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

#ifndef MATCHGAME_STRATEGY_H_
#define MATCHGAME_STRATEGY_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchgame/bit_string.h"
#include "matchgame/game.h"
#include "matchgame/instance.h"
#include "matchgame/matching.h"

namespace matchgame {

/// Exact fraction wins/total. Kept unreduced so that the denominator always
/// reads as the size of the question space.
class SuccessRatio {
 public:
  SuccessRatio(std::uint64_t wins, std::uint64_t total);

  std::uint64_t wins() const { return wins_; }
  std::uint64_t total() const { return total_; }
  bool is_one() const { return wins_ == total_; }
  double to_double() const { return static_cast<double>(wins_) / static_cast<double>(total_); }
  /// "wins/total".
  std::string to_string() const;

  /// Compares the rational values, not the representations.
  friend std::strong_ordering operator<=>(const SuccessRatio& a, const SuccessRatio& b) {
    return static_cast<unsigned __int128>(a.wins_) * b.total_ <=> static_cast<unsigned __int128>(b.wins_) * a.total_;
  }
  friend bool operator==(const SuccessRatio& a, const SuccessRatio& b) { return (a <=> b) == 0; }

 private:
  std::uint64_t wins_;
  std::uint64_t total_;
};

/// Bob's answer for one matching.
struct BobEntry {
  Edge edge;
  BitString b2;

  friend bool operator==(const BobEntry&, const BobEntry&) = default;
};

class IncompleteStrategyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest m for which strategy tables (2^m Alice rows) are materialized.
inline constexpr int kMaxTableInputSize = 20;

/// A strategy whose Bob table may have holes. Alice's table is always total.
///
/// Tables are indexed by position: Alice's by the value of x (so row order is
/// lexicographic order of x), Bob's by matching_rank(y).
class PartialStrategy {
 public:
  /// Validates shapes and that every defined Bob edge lies in its matching.
  PartialStrategy(GameInstance inst, std::vector<std::uint64_t> alice, std::vector<std::optional<BobEntry>> bob);

  const GameInstance& instance() const { return inst_; }
  std::span<const std::uint64_t> alice_table() const { return alice_; }
  std::span<const std::optional<BobEntry>> bob_table() const { return bob_; }

  BitString alice(const BitString& x) const;
  std::optional<BobEntry> bob(const PerfectMatching& y) const;

  bool is_total() const;
  std::size_t undefined_count() const;

  friend bool operator==(const PartialStrategy&, const PartialStrategy&) = default;

 private:
  GameInstance inst_;
  std::vector<std::uint64_t> alice_;
  std::vector<std::optional<BobEntry>> bob_;
};

/// A pair of total tables s_A: X -> A, s_B: M_m -> B.
class DeterministicStrategy {
 public:
  DeterministicStrategy(GameInstance inst, std::vector<std::uint64_t> alice, std::vector<BobEntry> bob);
  /// Throws IncompleteStrategyError if any Bob entry is undefined.
  explicit DeterministicStrategy(const PartialStrategy& partial);

  const GameInstance& instance() const { return inst_; }
  std::span<const std::uint64_t> alice_table() const { return alice_; }
  std::span<const BobEntry> bob_table() const { return bob_; }

  BitString alice(const BitString& x) const;
  const BobEntry& bob(const PerfectMatching& y) const;

  PartialStrategy to_partial() const;

  friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;

 private:
  GameInstance inst_;
  std::vector<std::uint64_t> alice_;
  std::vector<BobEntry> bob_;
};

/// Exact count of won questions over all 2^m * (m-1)!! questions.
SuccessRatio success(const DeterministicStrategy& s);
/// Throws IncompleteStrategyError unless s is total.
SuccessRatio success(const PartialStrategy& s);

/// True iff every question on which s is defined is won.
bool verify_winning(const PartialStrategy& s);
bool verify_winning(const DeterministicStrategy& s);

/// First lost question in canonical order (x lexicographic, then matchings in
/// enumeration order), restricted to matchings where Bob is defined.
std::optional<Question> first_counterexample(const PartialStrategy& s);

/// {0} together with every power of two below 2^n.
std::vector<int> lemma1_vertex_set(const GameInstance& inst);

/// Alice answers a with bit k (from the right) equal to x_0 XOR x_{2^k}; Bob
/// answers (first edge of y inside the vertex set above, 0^n) when such an
/// edge exists and is undefined otherwise.
PartialStrategy lemma1_strategy(const GameInstance& inst);

/// Alice's W_m-based answer for a single input.
BitString lemma1_alice(const BitString& x, const GameInstance& inst);

/// The string of width n with ones exactly at bit positions i and j, counted
/// from the right (position k multiplies x_{2^k} in the W_m-based answer).
BitString indicator_string(int i, int j, const GameInstance& inst);

/// Winning strategy tables for m = 4 and m = 6, transcribed row by row.
/// Throws std::invalid_argument for any other m.
DeterministicStrategy figure_strategy(int m);

}  // namespace matchgame

#endif  // MATCHGAME_STRATEGY_H_
