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

#include "matchgame/strategy.h"

#include <algorithm>
#include <string_view>
#include <utility>

namespace matchgame {

SuccessRatio::SuccessRatio(std::uint64_t wins, std::uint64_t total) : wins_(wins), total_(total) {
  if (total == 0 || wins > total) {
    throw std::invalid_argument("success ratio needs 0 <= wins <= total and total > 0");
  }
}

std::string SuccessRatio::to_string() const { return std::to_string(wins_) + "/" + std::to_string(total_); }

namespace {

void check_table_shapes(const GameInstance& inst, std::span<const std::uint64_t> alice, std::size_t bob_size) {
  const int m = inst.input_size();
  if (m > kMaxTableInputSize) {
    throw std::invalid_argument("strategy tables are limited to m <= " + std::to_string(kMaxTableInputSize));
  }
  if (alice.size() != inst.alice_input_count()) {
    throw std::invalid_argument("Alice table has " + std::to_string(alice.size()) + " rows, expected " +
                                std::to_string(inst.alice_input_count()));
  }
  for (std::uint64_t a : alice) {
    if (a >= inst.output_count()) throw std::invalid_argument("Alice answer " + std::to_string(a) + " is too wide");
  }
  if (bob_size != matching_count(m)) {
    throw std::invalid_argument("Bob table has " + std::to_string(bob_size) + " rows, expected " +
                                std::to_string(matching_count(m)));
  }
}

void check_bob_entry(const GameInstance& inst, const PerfectMatching& y, const BobEntry& e) {
  if (e.b2.width() != inst.output_width()) {
    throw std::invalid_argument("Bob's b2 must have width " + std::to_string(inst.output_width()));
  }
  if (!y.contains(e.edge)) {
    throw std::invalid_argument("Bob answers edge " + e.edge.to_string() + " which is not in " + y.to_string());
  }
}

std::size_t alice_row(const GameInstance& inst, const BitString& x) {
  if (x.width() != inst.input_size()) throw std::invalid_argument("x must have width m");
  return static_cast<std::size_t>(x.value());
}

}  // namespace

PartialStrategy::PartialStrategy(GameInstance inst, std::vector<std::uint64_t> alice,
                                 std::vector<std::optional<BobEntry>> bob)
    : inst_(inst), alice_(std::move(alice)), bob_(std::move(bob)) {
  check_table_shapes(inst_, alice_, bob_.size());
  auto matchings = enumerate_matchings(inst_);
  for (std::size_t k = 0; k < bob_.size(); ++k) {
    if (bob_[k]) check_bob_entry(inst_, matchings[k], *bob_[k]);
  }
}

BitString PartialStrategy::alice(const BitString& x) const {
  return BitString(inst_.output_width(), alice_[alice_row(inst_, x)]);
}

std::optional<BobEntry> PartialStrategy::bob(const PerfectMatching& y) const {
  return bob_.at(static_cast<std::size_t>(matching_rank(y)));
}

bool PartialStrategy::is_total() const { return undefined_count() == 0; }

std::size_t PartialStrategy::undefined_count() const {
  return static_cast<std::size_t>(std::count(bob_.begin(), bob_.end(), std::nullopt));
}

DeterministicStrategy::DeterministicStrategy(GameInstance inst, std::vector<std::uint64_t> alice,
                                             std::vector<BobEntry> bob)
    : inst_(inst), alice_(std::move(alice)), bob_(std::move(bob)) {
  check_table_shapes(inst_, alice_, bob_.size());
  auto matchings = enumerate_matchings(inst_);
  for (std::size_t k = 0; k < bob_.size(); ++k) check_bob_entry(inst_, matchings[k], bob_[k]);
}

DeterministicStrategy::DeterministicStrategy(const PartialStrategy& partial)
    : inst_(partial.instance()), alice_(partial.alice_table().begin(), partial.alice_table().end()) {
  bob_.reserve(partial.bob_table().size());
  for (std::size_t k = 0; k < partial.bob_table().size(); ++k) {
    const auto& e = partial.bob_table()[k];
    if (!e) {
      throw IncompleteStrategyError("Bob's table is undefined on " +
                                    matching_unrank(inst_.input_size(), k).to_string());
    }
    bob_.push_back(*e);
  }
}

BitString DeterministicStrategy::alice(const BitString& x) const {
  return BitString(inst_.output_width(), alice_[alice_row(inst_, x)]);
}

const BobEntry& DeterministicStrategy::bob(const PerfectMatching& y) const {
  return bob_.at(static_cast<std::size_t>(matching_rank(y)));
}

PartialStrategy DeterministicStrategy::to_partial() const {
  return PartialStrategy(inst_, alice_, std::vector<std::optional<BobEntry>>(bob_.begin(), bob_.end()));
}

namespace {

// Counts won questions; an undefined Bob row contributes nothing. If
// `first_loss` is non-null, stops at the first lost question.
std::uint64_t count_wins(const GameInstance& inst, std::span<const std::uint64_t> alice,
                         std::span<const std::optional<BobEntry>> bob,
                         std::optional<std::pair<std::uint64_t, std::size_t>>* first_loss) {
  const int m = inst.input_size();
  std::uint64_t wins = 0;
  for (std::uint64_t x = 0; x < alice.size(); ++x) {
    for (std::size_t k = 0; k < bob.size(); ++k) {
      if (!bob[k]) continue;
      const BobEntry& e = *bob[k];
      if (parity_condition_holds(m, x, e.edge.lo, e.edge.hi, alice[x], e.b2.value())) {
        ++wins;
      } else if (first_loss) {
        *first_loss = std::make_pair(x, k);
        return wins;
      }
    }
  }
  return wins;
}

}  // namespace

SuccessRatio success(const DeterministicStrategy& s) {
  const GameInstance& inst = s.instance();
  const int m = inst.input_size();
  std::uint64_t wins = 0;
  auto alice = s.alice_table();
  auto bob = s.bob_table();
  for (std::uint64_t x = 0; x < alice.size(); ++x) {
    for (const BobEntry& e : bob) {
      wins += parity_condition_holds(m, x, e.edge.lo, e.edge.hi, alice[x], e.b2.value()) ? 1 : 0;
    }
  }
  return SuccessRatio(wins, inst.alice_input_count() * matching_count(m));
}

SuccessRatio success(const PartialStrategy& s) { return success(DeterministicStrategy(s)); }

std::optional<Question> first_counterexample(const PartialStrategy& s) {
  std::optional<std::pair<std::uint64_t, std::size_t>> loss;
  count_wins(s.instance(), s.alice_table(), s.bob_table(), &loss);
  if (!loss) return std::nullopt;
  const int m = s.instance().input_size();
  return Question{BitString(m, loss->first), matching_unrank(m, loss->second)};
}

bool verify_winning(const PartialStrategy& s) { return !first_counterexample(s).has_value(); }

bool verify_winning(const DeterministicStrategy& s) { return success(s).is_one(); }

std::vector<int> lemma1_vertex_set(const GameInstance& inst) {
  std::vector<int> w{0};
  for (int i = 0; i < inst.output_width(); ++i) w.push_back(1 << i);
  return w;
}

BitString lemma1_alice(const BitString& x, const GameInstance& inst) {
  if (x.width() != inst.input_size()) throw std::invalid_argument("x must have width m");
  std::uint64_t a = 0;
  for (int k = 0; k < inst.output_width(); ++k) {
    a |= static_cast<std::uint64_t>(x.bit(0) ^ x.bit(1 << k)) << k;
  }
  return BitString(inst.output_width(), a);
}

PartialStrategy lemma1_strategy(const GameInstance& inst) {
  const int m = inst.input_size();
  if (m > kMaxTableInputSize) {
    throw std::invalid_argument("strategy tables are limited to m <= " + std::to_string(kMaxTableInputSize));
  }
  std::vector<std::uint64_t> alice(inst.alice_input_count());
  for (std::uint64_t x = 0; x < alice.size(); ++x) alice[x] = lemma1_alice(BitString(m, x), inst).value();

  std::vector<bool> in_w(static_cast<std::size_t>(m), false);
  for (int w : lemma1_vertex_set(inst)) in_w[static_cast<std::size_t>(w)] = true;
  std::vector<std::optional<BobEntry>> bob;
  for (const PerfectMatching& y : enumerate_matchings(inst)) {
    std::optional<BobEntry> entry;
    for (const Edge& e : y.edges()) {
      if (in_w[static_cast<std::size_t>(e.lo)] && in_w[static_cast<std::size_t>(e.hi)]) {
        entry = BobEntry{e, BitString::zeros(inst.output_width())};
        break;
      }
    }
    bob.push_back(entry);
  }
  return PartialStrategy(inst, std::move(alice), std::move(bob));
}

BitString indicator_string(int i, int j, const GameInstance& inst) {
  const int n = inst.output_width();
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw std::out_of_range("indicator positions must lie in [0, " + std::to_string(n) + ")");
  }
  return BitString(n, (std::uint64_t{1} << i) | (std::uint64_t{1} << j));
}

namespace {

struct AliceRow {
  std::string_view answer;
  std::vector<std::string_view> inputs;
};

struct BobRow {
  std::string_view answer_edge;
  std::string_view b2;
  std::vector<std::string_view> matchings;
};

const std::vector<AliceRow>& figure4_alice() {
  static const std::vector<AliceRow> rows = {
      {"00", {"0000", "0001", "1110", "1111"}},
      {"01", {"0100", "0101", "1010", "1011"}},
      {"10", {"0010", "0011", "1100", "1101"}},
      {"11", {"1000", "1001", "0110", "0111"}},
  };
  return rows;
}

const std::vector<BobRow>& figure4_bob() {
  static const std::vector<BobRow> rows = {
      {"0-1", "00", {"0-1,2-3"}},
      {"0-2", "00", {"0-2,1-3"}},
      {"1-2", "00", {"1-2,0-3"}},
  };
  return rows;
}

const std::vector<AliceRow>& figure6_alice() {
  static const std::vector<AliceRow> rows = {
      {"000", {"000000", "000001", "000100", "000101", "111010", "111011", "111110", "111111"}},
      {"100", {"000010", "000011", "000110", "000111", "111000", "111001", "111100", "111101"}},
      {"010", {"001000", "001001", "001100", "001101", "110010", "110011", "110110", "110111"}},
      {"110", {"001010", "001011", "001110", "001111", "110000", "110001", "110100", "110101"}},
      {"001", {"010000", "010001", "010100", "010101", "101010", "101011", "101110", "101111"}},
      {"101", {"010010", "010011", "010110", "010111", "101000", "101001", "101100", "101101"}},
      {"011", {"011000", "011001", "011100", "011101", "100010", "100011", "100110", "100111"}},
      {"111", {"011010", "011011", "011110", "011111", "100000", "100001", "100100", "100101"}},
  };
  return rows;
}

const std::vector<BobRow>& figure6_bob() {
  static const std::vector<BobRow> rows = {
      {"0-1", "000", {"0-1,2-3,4-5", "0-1,2-5,3-4"}},
      {"0-2", "000", {"0-2,1-3,4-5", "0-2,1-5,3-4"}},
      {"0-4", "000", {"0-4,1-2,3-5", "0-4,1-3,2-5", "0-4,1-5,2-3"}},
      {"1-2", "000", {"0-3,1-2,4-5", "0-5,1-2,3-4"}},
      {"1-4", "000", {"0-2,1-4,3-5", "0-3,1-4,2-5", "0-5,1-4,2-3"}},
      {"2-4", "000", {"0-1,2-4,3-5", "0-3,1-5,2-4", "0-5,1-3,2-4"}},
  };
  return rows;
}

DeterministicStrategy build_from_rows(const GameInstance& inst, const std::vector<AliceRow>& alice_rows,
                                      const std::vector<BobRow>& bob_rows) {
  std::vector<std::optional<std::uint64_t>> alice(inst.alice_input_count());
  for (const AliceRow& row : alice_rows) {
    BitString a = BitString::parse(row.answer);
    for (std::string_view x : row.inputs) alice[BitString::parse(x).value()] = a.value();
  }
  std::vector<std::optional<BobEntry>> bob(matching_count(inst.input_size()));
  for (const BobRow& row : bob_rows) {
    BobEntry entry{Edge::parse(row.answer_edge), BitString::parse(row.b2)};
    for (std::string_view y : row.matchings) bob[matching_rank(parse_matching(y, inst))] = entry;
  }
  std::vector<std::uint64_t> alice_total;
  for (const auto& a : alice) alice_total.push_back(a.value());
  return DeterministicStrategy(PartialStrategy(inst, std::move(alice_total), std::move(bob)));
}

}  // namespace

DeterministicStrategy figure_strategy(int m) {
  if (m == 4) return build_from_rows(GameInstance(4), figure4_alice(), figure4_bob());
  if (m == 6) return build_from_rows(GameInstance(6), figure6_alice(), figure6_bob());
  throw std::invalid_argument("figure strategies exist only for m = 4 and m = 6, got " + std::to_string(m));
}

}  // namespace matchgame
