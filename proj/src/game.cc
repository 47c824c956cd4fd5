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

#include "matchgame/game.h"

#include <stdexcept>
#include <string>

namespace matchgame {

BitString encode_index(int i, const GameInstance& inst) {
  if (i < 0 || i >= inst.input_size()) {
    throw std::out_of_range("index " + std::to_string(i) + " outside 0.." + std::to_string(inst.input_size() - 1));
  }
  return BitString(inst.output_width(), static_cast<std::uint64_t>(i));
}

bool wins_round(const GameInstance& inst, const Question& q, const Answer& ans) {
  const int m = inst.input_size();
  const int n = inst.output_width();
  if (q.x.width() != m) {
    throw std::invalid_argument("x has width " + std::to_string(q.x.width()) + ", expected " + std::to_string(m));
  }
  if (q.y.vertex_count() != m) throw std::invalid_argument("matching is not over 0.." + std::to_string(m - 1));
  if (ans.a.width() != n || ans.b2.width() != n) {
    throw std::invalid_argument("answer strings must have width " + std::to_string(n));
  }
  if (ans.edge.lo < 0 || ans.edge.hi >= m || ans.edge.lo == ans.edge.hi) {
    throw std::invalid_argument("answer edge " + ans.edge.to_string() + " is not a pair of distinct indices below m");
  }
  if (!q.y.contains(ans.edge)) return false;
  int lhs = q.x.bit(ans.edge.lo) ^ q.x.bit(ans.edge.hi);
  BitString diff = encode_index(ans.edge.lo, inst) ^ encode_index(ans.edge.hi, inst);
  return lhs == dot(diff, ans.a ^ ans.b2);
}

}  // namespace matchgame
