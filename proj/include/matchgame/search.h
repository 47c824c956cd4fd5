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

#ifndef MATCHGAME_SEARCH_H_
#define MATCHGAME_SEARCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchgame/strategy.h"

namespace matchgame {

struct BestResponse {
  std::vector<std::uint64_t> alice;
  SuccessRatio success;
};

/// For a fixed total Bob table, picks for each x the answer winning the most
/// matchings (smallest answer on ties). The returned success is exact.
BestResponse alice_best_response(std::span<const BobEntry> bob, const GameInstance& inst);

class BudgetExceededError : public std::runtime_error {
 public:
  /// `space` is the decimal size of the Bob-table space.
  BudgetExceededError(std::string space, std::uint64_t budget);
  const std::string& space() const { return space_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::string space_;
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultOmegaBudget = 1'000'000;

/// Number of Bob tables, prod over matchings of (m/2 * 2^n), in decimal.
std::string bob_table_space(const GameInstance& inst);

struct OptimumResult {
  SuccessRatio success;
  DeterministicStrategy witness;
};

/// Exact maximum success over all deterministic strategies, by enumerating
/// Bob tables and best-responding with Alice. The witness is the first optimal
/// Bob table in lexicographic order. Throws BudgetExceededError if the Bob
/// table space is larger than `budget`.
OptimumResult exact_omega_d(const GameInstance& inst, std::uint64_t budget = kDefaultOmegaBudget);

/// Chooses Bob's entry for a matching the W_m construction leaves open.
using BobFiller = std::function<BobEntry(const PerfectMatching&, const GameInstance&)>;

/// Canonically first edge of y with b2 = 0^n.
BobEntry first_edge_filler(const PerfectMatching& y, const GameInstance& inst);

DeterministicStrategy complete_lemma1(const GameInstance& inst, const BobFiller& filler = first_edge_filler);

struct HillClimbOptions {
  std::uint64_t seed = 0;
  std::uint64_t iterations = 1000;
  /// Restart from a random Bob table after this many iterations without a
  /// strict improvement. 0 disables restarts.
  std::uint64_t restart_patience = 0;
  /// Starting Bob table; random when absent.
  std::optional<std::vector<BobEntry>> initial_bob;
  /// Record the success of every accepted move (and restarts) in the result.
  bool record_trace = false;
};

struct HillClimbStep {
  SuccessRatio success;
  bool restart;
};

struct HillClimbResult {
  DeterministicStrategy strategy;
  SuccessRatio success;
  std::uint64_t restarts = 0;
  std::vector<HillClimbStep> trace;
};

/// Local search over Bob tables with Alice best-responding. A move rewrites
/// one matching's Bob entry; moves that do not lower success are accepted.
/// Returns the best strategy seen. Success values found this way are lower
/// bounds on the optimum.
HillClimbResult hill_climb(const GameInstance& inst, const HillClimbOptions& options);

}  // namespace matchgame

#endif  // MATCHGAME_SEARCH_H_
