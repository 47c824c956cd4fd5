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

#include "matchgame/instance.h"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace matchgame {

int ceil_log2(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("ceil_log2 of zero");
  return m == 1 ? 0 : 64 - std::countl_zero(m - 1);
}

GameInstance::GameInstance(int m) : m_(m), n_(0) {
  if (m < 2 || m > kMaxInputSize || m % 2 != 0) {
    throw std::invalid_argument("input size m must be even and in [2, 64], got " + std::to_string(m));
  }
  n_ = ceil_log2(static_cast<std::uint64_t>(m));
}

Edge Edge::of(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("edge endpoints must be non-negative");
  if (i == j) throw std::invalid_argument("edge endpoints must differ: " + std::to_string(i));
  return i < j ? Edge{i, j} : Edge{j, i};
}

namespace {

int parse_index(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed edge '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Edge Edge::parse(std::string_view text) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    throw std::invalid_argument("malformed edge '" + std::string(text) + "', expected i-j");
  }
  return of(parse_index(text.substr(0, dash), text), parse_index(text.substr(dash + 1), text));
}

std::string Edge::to_string() const { return std::to_string(lo) + "-" + std::to_string(hi); }

}  // namespace matchgame
