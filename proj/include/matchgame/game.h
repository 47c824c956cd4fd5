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

#ifndef MATCHGAME_GAME_H_
#define MATCHGAME_GAME_H_

#include <cstdint>

#include "matchgame/bit_string.h"
#include "matchgame/instance.h"
#include "matchgame/matching.h"

namespace matchgame {

struct Question {
  BitString x;
  PerfectMatching y;
};

/// Joint answer: Alice's a, Bob's edge and b2.
struct Answer {
  Edge edge;
  BitString a;
  BitString b2;
};

/// Index i written big-endian, zero-padded to the instance's output width.
/// Index 0 encodes as all zeros.
BitString encode_index(int i, const GameInstance& inst);

/// The round is won iff the edge belongs to y and
///   x_i XOR x_j == (enc(i) XOR enc(j)) . (a XOR b2).
/// Throws std::invalid_argument if the question or answer is not shaped for
/// inst.
bool wins_round(const GameInstance& inst, const Question& q, const Answer& ans);

/// Unchecked word-level form of the parity condition, without the edge
/// membership test. `x` holds x_v at bit (m-1-v); a and b2 are raw values.
/// The encodings of i and j are just i and j as words.
inline bool parity_condition_holds(int m, std::uint64_t x, int i, int j, std::uint64_t a, std::uint64_t b2) {
  int lhs = static_cast<int>(((x >> (m - 1 - i)) ^ (x >> (m - 1 - j))) & 1);
  return lhs == parity(static_cast<std::uint64_t>(i ^ j) & (a ^ b2));
}

}  // namespace matchgame

#endif  // MATCHGAME_GAME_H_
