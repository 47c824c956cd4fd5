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

// Statevector simulation of the entangled strategy:
//
//  1. Alice and Bob share sum_i |i>|i> / sqrt(m).
//  2. Alice applies the phase (-1)^{x_i} to |i>, then the n-fold Hadamard
//     transform, and measures a.
//  3. Bob measures in the basis (|i> +/- |j>)/sqrt(2), {i,j} in y, obtaining
//     the edge and a sign s. He answers b2 with enc(i ^ j) . b2 = s.
//
// Only m = 2^n is supported; the Hadamard step needs a power-of-two register.

#ifndef MATCHGAME_QUANTUM_H_
#define MATCHGAME_QUANTUM_H_

#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matchgame/game.h"

namespace matchgame {

class UnsupportedInstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Amplitudes over |i>|j>, Alice's index i major.
class StateVector {
 public:
  using Amplitude = std::complex<double>;

  explicit StateVector(int side) : side_(side), amps_(static_cast<std::size_t>(side) * side) {}

  int side() const { return side_; }
  Amplitude& at(int i, int j) { return amps_[static_cast<std::size_t>(i) * side_ + j]; }
  const Amplitude& at(int i, int j) const { return amps_[static_cast<std::size_t>(i) * side_ + j]; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  /// Sum of squared magnitudes.
  double norm_squared() const;

  /// Multiplies |i>|j> by (-1)^{x_i}.
  void apply_alice_phase(const BitString& x);
  /// Unitary Walsh-Hadamard transform on Alice's register.
  void apply_alice_hadamard();
  /// Projects Alice's register onto |a>.
  void project_alice(int a);
  /// Projects Bob's register onto the real unit vector `basis`.
  void project_bob(const std::vector<double>& basis);

 private:
  int side_;
  std::vector<Amplitude> amps_;
};

/// Maximally entangled state over m = 2^n levels. Throws
/// UnsupportedInstanceError otherwise.
StateVector shared_state(const GameInstance& inst);

struct Outcome {
  BitString a;
  Edge edge;
  BitString b2;

  friend bool operator==(const Outcome&, const Outcome&) = default;
  friend std::strong_ordering operator<=>(const Outcome& l, const Outcome& r) {
    if (auto c = l.edge <=> r.edge; c != 0) return c;
    if (auto c = l.b2 <=> r.b2; c != 0) return c;
    return l.a <=> r.a;
  }
};

/// Outcomes with their probabilities, sorted by (edge, b2, a). Outcomes of
/// numerically zero probability are dropped.
using OutcomeDistribution = std::vector<std::pair<Outcome, double>>;

enum class MeasurementOrder { kBobFirst, kAliceFirst };

/// Bob's b2 for sign s: zero for s = 0, otherwise the lowest set bit of
/// enc(i) ^ enc(j).
BitString quantum_b2(const Edge& edge, int sign, const GameInstance& inst);

OutcomeDistribution joint_distribution(const GameInstance& inst, const BitString& x, const PerfectMatching& y,
                                       MeasurementOrder order = MeasurementOrder::kBobFirst);

/// One round drawn from the joint distribution; deterministic in the seed.
Answer sample_round(const GameInstance& inst, const BitString& x, const PerfectMatching& y, std::uint64_t seed);
/// `rounds` independent rounds from a single seeded stream.
std::vector<Answer> sample_rounds(const GameInstance& inst, const BitString& x, const PerfectMatching& y,
                                  std::uint64_t seed, std::uint64_t rounds);

struct QuantumVerification {
  bool verified = false;
  std::uint64_t questions = 0;
  double max_normalization_error = 0;  // |sum of probabilities - 1|
  double max_order_discrepancy = 0;    // Bob-first vs Alice-first, elementwise
  std::optional<std::pair<Question, Outcome>> counterexample;
};

/// Every outcome with probability above 1e-12 must win, on every question.
QuantumVerification verify_always_wins_report(const GameInstance& inst);
bool verify_always_wins(const GameInstance& inst);

}  // namespace matchgame

#endif  // MATCHGAME_QUANTUM_H_
