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

#include "matchgame/search.h"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <random>

namespace matchgame {

namespace {

// counts[x][a] = number of matchings whose Bob entry wins against Alice
// answering a on input x. Alice's best response and its success follow from
// the row maxima, and swapping one Bob entry touches every row once.
class ScoreTable {
 public:
  ScoreTable(const GameInstance& inst, std::span<const PerfectMatching> matchings)
      : m_(inst.input_size()),
        answers_(inst.output_count()),
        inputs_(inst.alice_input_count()),
        counts_(inputs_ * answers_, 0),
        total_questions_(inputs_ * matchings.size()) {}

  void add(const BobEntry& e) { apply(e, +1); }
  void remove(const BobEntry& e) { apply(e, -1); }

  std::uint64_t best_wins() const {
    std::uint64_t wins = 0;
    for (std::uint64_t x = 0; x < inputs_; ++x) {
      const auto* row = &counts_[x * answers_];
      wins += static_cast<std::uint64_t>(*std::max_element(row, row + answers_));
    }
    return wins;
  }

  std::vector<std::uint64_t> best_answers() const {
    std::vector<std::uint64_t> alice(inputs_);
    for (std::uint64_t x = 0; x < inputs_; ++x) {
      const auto* row = &counts_[x * answers_];
      alice[x] = static_cast<std::uint64_t>(std::max_element(row, row + answers_) - row);  // first max
    }
    return alice;
  }

  SuccessRatio ratio(std::uint64_t wins) const { return SuccessRatio(wins, total_questions_); }

 private:
  void apply(const BobEntry& e, int delta) {
    const auto d = static_cast<std::uint64_t>(e.edge.lo ^ e.edge.hi);
    const std::uint64_t b2 = e.b2.value();
    std::vector<int> rhs(answers_);
    for (std::uint64_t a = 0; a < answers_; ++a) rhs[a] = parity(d & (a ^ b2));
    const int shift_lo = m_ - 1 - e.edge.lo;
    const int shift_hi = m_ - 1 - e.edge.hi;
    for (std::uint64_t x = 0; x < inputs_; ++x) {
      int lhs = static_cast<int>(((x >> shift_lo) ^ (x >> shift_hi)) & 1);
      auto* row = &counts_[x * answers_];
      for (std::uint64_t a = 0; a < answers_; ++a) {
        if (rhs[a] == lhs) row[a] += delta;
      }
    }
  }

  int m_;
  std::uint64_t answers_;
  std::uint64_t inputs_;
  std::vector<int> counts_;
  std::uint64_t total_questions_;
};

void require_table_size(const GameInstance& inst) {
  if (inst.input_size() > kMaxTableInputSize) {
    throw std::invalid_argument("strategy tables are limited to m <= " + std::to_string(kMaxTableInputSize));
  }
}

// Bob's options for one matching: edge-major, then b2 ascending.
std::uint64_t choices_per_matching(const GameInstance& inst) {
  return static_cast<std::uint64_t>(inst.input_size() / 2) * inst.output_count();
}

BobEntry bob_choice(const PerfectMatching& y, const GameInstance& inst, std::uint64_t c) {
  return BobEntry{y.edges()[c / inst.output_count()], BitString(inst.output_width(), c % inst.output_count())};
}

}  // namespace

BestResponse alice_best_response(std::span<const BobEntry> bob, const GameInstance& inst) {
  require_table_size(inst);
  auto matchings = enumerate_matchings(inst);
  if (bob.size() != matchings.size()) throw std::invalid_argument("Bob table must cover every matching");
  ScoreTable table(inst, matchings);
  for (std::size_t k = 0; k < bob.size(); ++k) {
    if (!matchings[k].contains(bob[k].edge)) {
      throw std::invalid_argument("Bob edge " + bob[k].edge.to_string() + " not in " + matchings[k].to_string());
    }
    table.add(bob[k]);
  }
  return BestResponse{table.best_answers(), table.ratio(table.best_wins())};
}

BudgetExceededError::BudgetExceededError(std::string space, std::uint64_t budget)
    : std::runtime_error("Bob-table space of size " + space + " exceeds the budget of " + std::to_string(budget)),
      space_(std::move(space)),
      budget_(budget) {}

std::string bob_table_space(const GameInstance& inst) {
  boost::multiprecision::cpp_int space = 1;
  const std::uint64_t per = choices_per_matching(inst);
  const std::uint64_t count = matching_count(inst.input_size());
  for (std::uint64_t k = 0; k < count; ++k) space *= per;
  return space.str();
}

OptimumResult exact_omega_d(const GameInstance& inst, std::uint64_t budget) {
  const std::uint64_t per = choices_per_matching(inst);
  const std::uint64_t count = matching_count(inst.input_size());
  {
    boost::multiprecision::cpp_int space = 1;
    for (std::uint64_t k = 0; k < count && space <= budget; ++k) space *= per;
    if (space > budget) throw BudgetExceededError(bob_table_space(inst), budget);
  }
  require_table_size(inst);

  auto matchings = enumerate_matchings(inst);
  ScoreTable table(inst, matchings);
  std::vector<std::uint64_t> choice(count, 0);
  std::vector<BobEntry> bob;
  for (std::size_t k = 0; k < count; ++k) {
    bob.push_back(bob_choice(matchings[k], inst, 0));
    table.add(bob.back());
  }

  std::uint64_t best = table.best_wins();
  std::vector<BobEntry> best_bob = bob;
  const std::uint64_t perfect = inst.alice_input_count() * count;
  // Odometer over Bob tables, last matching fastest: lexicographic order.
  auto advance = [&] {
    for (std::size_t k = count; k-- > 0;) {
      table.remove(bob[k]);
      choice[k] = (choice[k] + 1) % per;
      bob[k] = bob_choice(matchings[k], inst, choice[k]);
      table.add(bob[k]);
      if (choice[k] != 0) return true;
    }
    return false;
  };
  while (best < perfect && advance()) {
    std::uint64_t wins = table.best_wins();
    if (wins > best) {
      best = wins;
      best_bob = bob;
    }
  }

  BestResponse alice = alice_best_response(best_bob, inst);
  DeterministicStrategy witness(inst, std::move(alice.alice), std::move(best_bob));
  return OptimumResult{success(witness), std::move(witness)};
}

BobEntry first_edge_filler(const PerfectMatching& y, const GameInstance& inst) {
  return BobEntry{y.edges().front(), BitString::zeros(inst.output_width())};
}

DeterministicStrategy complete_lemma1(const GameInstance& inst, const BobFiller& filler) {
  PartialStrategy partial = lemma1_strategy(inst);
  std::vector<std::optional<BobEntry>> bob(partial.bob_table().begin(), partial.bob_table().end());
  for (std::size_t k = 0; k < bob.size(); ++k) {
    if (!bob[k]) bob[k] = filler(matching_unrank(inst.input_size(), k), inst);
  }
  std::vector<std::uint64_t> alice(partial.alice_table().begin(), partial.alice_table().end());
  return DeterministicStrategy(PartialStrategy(inst, std::move(alice), std::move(bob)));
}

HillClimbResult hill_climb(const GameInstance& inst, const HillClimbOptions& options) {
  require_table_size(inst);
  auto matchings = enumerate_matchings(inst);
  const std::uint64_t count = matchings.size();
  const std::uint64_t per = choices_per_matching(inst);
  std::mt19937_64 rng(options.seed);
  auto below = [&rng](std::uint64_t n) { return rng() % n; };

  std::vector<BobEntry> bob;
  auto randomize = [&] {
    bob.clear();
    for (std::size_t k = 0; k < count; ++k) bob.push_back(bob_choice(matchings[k], inst, below(per)));
  };
  if (options.initial_bob) {
    if (options.initial_bob->size() != count) throw std::invalid_argument("initial Bob table has the wrong size");
    bob = *options.initial_bob;
  } else {
    randomize();
  }

  auto rebuild = [&] {
    ScoreTable t(inst, matchings);
    for (const BobEntry& e : bob) t.add(e);
    return t;
  };
  ScoreTable table = rebuild();
  std::uint64_t current = table.best_wins();
  std::uint64_t best = current;
  std::vector<BobEntry> best_bob = bob;

  std::vector<HillClimbStep> trace;
  std::uint64_t restarts = 0;
  if (options.record_trace) trace.push_back({table.ratio(current), false});

  const std::uint64_t perfect = inst.alice_input_count() * count;
  std::uint64_t stale = 0;
  for (std::uint64_t it = 0; it < options.iterations && best < perfect; ++it) {
    if (per > 1) {
      std::size_t k = below(count);
      BobEntry old = bob[k];
      BobEntry next = old;
      while (next == old) next = bob_choice(matchings[k], inst, below(per));
      table.remove(old);
      table.add(next);
      std::uint64_t wins = table.best_wins();
      if (wins >= current) {
        stale = wins > current ? 0 : stale + 1;
        current = wins;
        bob[k] = next;
        if (options.record_trace) trace.push_back({table.ratio(current), false});
        if (current > best) {
          best = current;
          best_bob = bob;
        }
      } else {
        table.remove(next);
        table.add(old);
        ++stale;
      }
    }
    if (options.restart_patience > 0 && stale >= options.restart_patience && best < perfect) {
      randomize();
      table = rebuild();
      current = table.best_wins();
      stale = 0;
      ++restarts;
      if (options.record_trace) trace.push_back({table.ratio(current), true});
      if (current > best) {
        best = current;
        best_bob = bob;
      }
    }
  }

  BestResponse alice = alice_best_response(best_bob, inst);
  DeterministicStrategy strategy(inst, std::move(alice.alice), std::move(best_bob));
  SuccessRatio exact = success(strategy);
  return HillClimbResult{std::move(strategy), exact, restarts, std::move(trace)};
}

}  // namespace matchgame
