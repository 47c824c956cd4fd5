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


// Graph plus parity function as text:
//
//   graph n=4
//   edge 0-1 h=1
//   edge 1-2 h=0
//
// Edges are written in sorted order. Blank lines are skipped.

#ifndef MATCHGAME_GRAPH_IO_H_
#define MATCHGAME_GRAPH_IO_H_

#include <string>
#include <string_view>
#include <utility>

#include "matchgame/coloring.h"
#include "matchgame/parse_error.h"

namespace matchgame {

std::string serialize_graph(const Graph& g, const ParityFunction& h);

/// Throws ParseError on unknown lines, a missing or repeated header, endpoints
/// out of range, repeated edges and h values other than 0 or 1.
std::pair<Graph, ParityFunction> parse_graph(std::string_view text);

}  // namespace matchgame

#endif  // MATCHGAME_GRAPH_IO_H_
