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

// Line-oriented strategy files:
//
//   game m=4
//   alice 0000 -> 00
//   ...
//   bob 0-1,2-3 -> 0-1 00
//
// Blank lines are skipped; any other unrecognized line is an error. Alice rows
// must cover all 2^m inputs. Missing Bob rows make the file a partial strategy.

#ifndef MATCHGAME_STRATEGY_IO_H_
#define MATCHGAME_STRATEGY_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "matchgame/parse_error.h"
#include "matchgame/strategy.h"

namespace matchgame {

/// Alice rows in lexicographic order of x, then Bob rows in canonical matching
/// order. Undefined Bob rows are omitted.
std::string serialize_strategy(const PartialStrategy& s);
std::string serialize_strategy(const DeterministicStrategy& s);

/// Throws ParseError with a 1-based line and column.
PartialStrategy parse_strategy(std::string_view text);

}  // namespace matchgame

#endif  // MATCHGAME_STRATEGY_IO_H_
