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

#include "matchgame/strategy_io.h"

#include <charconv>
#include <optional>
#include <vector>

namespace matchgame {

std::string serialize_strategy(const PartialStrategy& s) {
  const GameInstance& inst = s.instance();
  const int m = inst.input_size();
  std::string out = "game m=" + std::to_string(m) + "\n";
  auto alice = s.alice_table();
  for (std::uint64_t x = 0; x < alice.size(); ++x) {
    out += "alice " + BitString(m, x).to_string() + " -> " + BitString(inst.output_width(), alice[x]).to_string();
    out += "\n";
  }
  auto bob = s.bob_table();
  for (std::size_t k = 0; k < bob.size(); ++k) {
    if (!bob[k]) continue;
    out += "bob " + matching_unrank(m, k).to_string() + " -> " + bob[k]->edge.to_string() + " " +
           bob[k]->b2.to_string() + "\n";
  }
  return out;
}

std::string serialize_strategy(const DeterministicStrategy& s) { return serialize_strategy(s.to_partial()); }

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PartialStrategy run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t eol = text_.find('\n', pos);
      std::string_view line = text_.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
      ++line_no_;
      parse_line(tokenize(line), static_cast<int>(line.size()) + 1);
      if (eol == std::string_view::npos) break;
      pos = eol + 1;
    }
    if (!inst_) throw ParseError(line_no_, 1, "missing 'game m=<m>' header");
    for (std::size_t x = 0; x < alice_.size(); ++x) {
      if (!alice_[x]) {
        throw ParseError(line_no_, 1, "no alice line for input " + BitString(inst_->input_size(), x).to_string());
      }
    }
    std::vector<std::uint64_t> alice;
    alice.reserve(alice_.size());
    for (const auto& a : alice_) alice.push_back(*a);
    return PartialStrategy(*inst_, std::move(alice), std::move(bob_));
  }

 private:
  [[noreturn]] void fail(int column, const std::string& message) const { throw ParseError(line_no_, column, message); }

  void expect_count(const std::vector<Token>& toks, std::size_t n, int eol_column, const char* shape) const {
    if (toks.size() < n) fail(eol_column, std::string("truncated line, expected '") + shape + "'");
    if (toks.size() > n) fail(toks[n].column, std::string("unexpected trailing text, expected '") + shape + "'");
  }

  void expect_arrow(const Token& t) const {
    if (t.text != "->") fail(t.column, "expected '->'");
  }

  BitString bits(const Token& t, int width, const char* what) const {
    BitString b;
    try {
      b = BitString::parse(t.text);
    } catch (const std::exception& e) {
      fail(t.column, std::string("bad ") + what + ": " + e.what());
    }
    if (b.width() != width) {
      fail(t.column, std::string(what) + " must have " + std::to_string(width) + " bits, got " +
                         std::to_string(b.width()));
    }
    return b;
  }

  void parse_line(const std::vector<Token>& toks, int eol_column) {
    if (toks.empty()) return;
    const Token& head = toks[0];
    if (!inst_) {
      if (head.text != "game") fail(head.column, "expected 'game m=<m>' header before any other line");
      expect_count(toks, 2, eol_column, "game m=<m>");
      parse_header(toks[1]);
      return;
    }
    if (head.text == "alice") {
      parse_alice(toks, eol_column);
    } else if (head.text == "bob") {
      parse_bob(toks, eol_column);
    } else if (head.text == "game") {
      fail(head.column, "duplicate game header");
    } else {
      fail(head.column, "unknown line type '" + std::string(head.text) + "'");
    }
  }

  void parse_header(const Token& t) {
    if (t.text.substr(0, 2) != "m=") fail(t.column, "expected m=<m>");
    std::string_view digits = t.text.substr(2);
    int m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      fail(t.column + 2, "m must be a decimal integer");
    }
    if (m < 2 || m % 2 != 0 || m > kMaxTableInputSize) {
      fail(t.column + 2, "m must be even and in [2, " + std::to_string(kMaxTableInputSize) + "]");
    }
    inst_.emplace(m);
    alice_.assign(inst_->alice_input_count(), std::nullopt);
    bob_.assign(matching_count(m), std::nullopt);
  }

  void parse_alice(const std::vector<Token>& toks, int eol_column) {
    expect_count(toks, 4, eol_column, "alice <x> -> <a>");
    BitString x = bits(toks[1], inst_->input_size(), "x");
    expect_arrow(toks[2]);
    BitString a = bits(toks[3], inst_->output_width(), "a");
    auto& slot = alice_[x.value()];
    if (slot) fail(toks[1].column, "duplicate alice line for " + x.to_string());
    slot = a.value();
  }

  void parse_bob(const std::vector<Token>& toks, int eol_column) {
    expect_count(toks, 5, eol_column, "bob <matching> -> <i-j> <b2>");
    PerfectMatching y;
    try {
      y = parse_matching(toks[1].text, *inst_);
    } catch (const std::exception& e) {
      fail(toks[1].column, std::string("bad matching: ") + e.what());
    }
    expect_arrow(toks[2]);
    Edge edge;
    try {
      edge = Edge::parse(toks[3].text);
    } catch (const std::exception& e) {
      fail(toks[3].column, std::string("bad edge: ") + e.what());
    }
    if (!y.contains(edge)) fail(toks[3].column, "edge " + edge.to_string() + " is not in " + y.to_string());
    BitString b2 = bits(toks[4], inst_->output_width(), "b2");
    auto& slot = bob_[matching_rank(y)];
    if (slot) fail(toks[1].column, "duplicate bob line for " + y.to_string());
    slot = BobEntry{edge, b2};
  }

  std::string_view text_;
  int line_no_ = 0;
  std::optional<GameInstance> inst_;
  std::vector<std::optional<std::uint64_t>> alice_;
  std::vector<std::optional<BobEntry>> bob_;
};

}  // namespace

PartialStrategy parse_strategy(std::string_view text) { return Parser(text).run(); }

}  // namespace matchgame
