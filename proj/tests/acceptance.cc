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


// Standalone acceptance run: one PASS/FAIL line per criterion, nonzero exit if
// any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matchgame/cli.h"
#include "matchgame/coloring.h"
#include "matchgame/quantum.h"
#include "matchgame/search.h"
#include "matchgame/strategy.h"
#include "matchgame/strategy_io.h"
#include "oracles.h"

using namespace matchgame;

namespace {

struct Check {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

std::set<std::string> bob_inputs_in(const std::string& strategy_text) {
  std::set<std::string> out;
  std::istringstream in(strategy_text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("bob ", 0) == 0) out.insert(line.substr(4, line.find(' ', 4) - 4));
  }
  return out;
}

Check matching_counts() {
  Check c;
  const std::map<int, std::size_t> expected{{2, 1}, {4, 3}, {6, 15}, {8, 105}};
  for (auto [m, count] : expected) {
    auto all = enumerate_matchings(GameInstance(m));
    c.require(all.size() == count, "count at m=" + std::to_string(m));
    if (m == 4 || m == 6) {
      std::set<std::string> listed = bob_inputs_in(serialize_strategy(figure_strategy(m)));
      std::set<std::string> enumerated;
      for (const auto& y : all) enumerated.insert(y.to_string());
      c.require(listed == enumerated, "figure Bob inputs differ at m=" + std::to_string(m));
    }
  }
  return c;
}

Check figures_win() {
  Check c;
  c.require(success(figure_strategy(4)) == SuccessRatio(48, 48) && success(figure_strategy(4)).total() == 48,
            "figure 4 success");
  c.require(success(figure_strategy(6)) == SuccessRatio(960, 960) && success(figure_strategy(6)).total() == 960,
            "figure 6 success");
  return c;
}

Check lemma1_reproduction() {
  Check c;
  for (int m : {2, 4, 6, 8, 10}) {
    PartialStrategy s = lemma1_strategy(GameInstance(m));
    c.require(verify_winning(s), "lemma1 loses at m=" + std::to_string(m));
    if (m == 4 || m == 6) c.require(s.is_total(), "Bob not total at m=" + std::to_string(m));
  }
  GameInstance eight(8);
  PerfectMatching y = parse_matching("0-3,1-5,2-6,4-7", eight);
  c.require(!lemma1_strategy(eight).bob(y).has_value(), "0-3,1-5,2-6,4-7 should be undefined");
  return c;
}

Check exact_optimum() {
  Check c;
  c.require(bob_table_space(GameInstance(4)) == "512", "m=4 space");
  for (int m : {2, 4}) {
    OptimumResult r = exact_omega_d(GameInstance(m));
    c.require(r.success.is_one() && verify_winning(r.witness), "omega_d at m=" + std::to_string(m));
  }
  return c;
}

Check certificate() {
  Check c;
  for (int m = 2; m <= 64; m += 2) {
    ImpossibilityCertificate cert = theorem2_certificate(m);
    bool expected = m / 2 < m - oracle::width_for(m);
    c.require(cert.excluded == expected && cert.excluded == (m >= 8), "certificate at m=" + std::to_string(m));
  }
  return c;
}

Check eight_not_winning() {
  Check c;
  GameInstance inst(8);
  c.require(!success(complete_lemma1(inst)).is_one(), "completed lemma1 wins at m=8");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    HillClimbOptions options;
    options.seed = seed;
    options.iterations = 1000;
    HillClimbResult r = hill_climb(inst, options);
    c.require(!r.success.is_one(), "hill climb reached 1 with seed " + std::to_string(seed));
    c.require(success(r.strategy) == r.success, "reported success mismatch");
  }
  return c;
}

Check colorings_oracle() {
  Check c;
  std::mt19937_64 rng(7);
  int zero_cases = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    int v = 1 + static_cast<int>(rng() % 6);
    std::vector<Edge> edges;
    std::vector<oracle::Pair> plain;
    for (int i = 0; i < v; ++i) {
      for (int j = i + 1; j < v; ++j) {
        if (rng() % 2) {
          edges.push_back(Edge::of(i, j));
          plain.emplace_back(i, j);
        }
      }
    }
    Graph g(v, edges);
    std::vector<int> h(edges.size());
    for (auto& bit : h) bit = static_cast<int>(rng() & 1);
    std::uint64_t expected = oracle::count_colorings(v, plain, h);
    zero_cases += expected == 0;
    c.require(count_colorings(g, ParityFunction(g, h)) == expected, "count mismatch");
  }
  c.require(zero_cases > 0, "no zero-coloring case sampled");
  return c;
}

Check cross_matching() {
  Check c;
  for (int m = 2; m <= 12; m += 2) {
    for (const auto& shape : oracle::integer_partitions(m, m / 2)) {
      std::vector<std::vector<int>> parts;
      std::vector<int> label;
      int next = 0;
      for (std::size_t k = 0; k < shape.size(); ++k) {
        parts.emplace_back(static_cast<std::size_t>(shape[k]));
        for (int& v : parts.back()) {
          v = next++;
          label.push_back(static_cast<int>(k));
        }
      }
      c.require(oracle::all_cross_matching_exists(label), "oracle finds no matching");
      PerfectMatching y = cross_component_matching(parts);
      for (const Edge& e : y.edges()) {
        c.require(label[static_cast<std::size_t>(e.lo)] != label[static_cast<std::size_t>(e.hi)],
                  "edge " + e.to_string() + " inside a part at m=" + std::to_string(m));
      }
    }
  }
  return c;
}

Check representative_bijection() {
  Check c;
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1500; ++trial) {
    int v = 1 + static_cast<int>(rng() % 8);
    std::vector<Edge> edges;
    for (int i = 0; i < v; ++i)
      for (int j = i + 1; j < v; ++j)
        if (rng() % 3 == 0) edges.push_back(Edge::of(i, j));
    Graph g(v, edges);
    BitString r(v, rng() & ((std::uint64_t{1} << v) - 1));
    ParityFunction h = h_from_representative(r, g);
    auto strings = strings_from_colorings(g, h);
    c.require(std::find(strings.begin(), strings.end(), r) != strings.end(), "representative missing");
    c.require(strings.size() == count_colorings(g, h), "size differs from count");
  }
  return c;
}

Check quantum_wins() {
  Check c;
  const std::map<int, std::uint64_t> questions{{2, 4}, {4, 48}, {8, 26880}};
  for (auto [m, count] : questions) {
    QuantumVerification r = verify_always_wins_report(GameInstance(m));
    c.require(r.verified && r.questions == count, "not verified at m=" + std::to_string(m));
    c.require(r.max_normalization_error <= 1e-9, "normalization at m=" + std::to_string(m));
    c.require(r.max_order_discrepancy <= 1e-9, "order invariance at m=" + std::to_string(m));
  }
  return c;
}

Check audits() {
  Check c;
  for (int m : {4, 6}) c.require(audit_lemma2(figure_strategy(m)).all_conditions(), "audit at m=" + std::to_string(m));
  return c;
}

Check file_round_trip() {
  Check c;
  for (int m : {4, 6}) {
    std::string text = serialize_strategy(figure_strategy(m));
    c.require(DeterministicStrategy(parse_strategy(text)) == figure_strategy(m), "figure round trip");
  }
  for (int m : {2, 4, 6, 8, 10}) {
    PartialStrategy s = lemma1_strategy(GameInstance(m));
    c.require(parse_strategy(serialize_strategy(s)) == s, "lemma1 round trip at m=" + std::to_string(m));
  }
  const std::vector<std::string> malformed{
      "game m=4\nalice 0000 -> 000\n",
      "alice 0000 -> 00\n",
      "game m=4\nalice 0000 -> 00\nalice 0000 -> 01\n",
      "game m=4\nbob 0-1,2-3 -> 0-2 00\n",
      "game m=4\nwhat\n",
  };
  for (const std::string& text : malformed) {
    std::istringstream in(text);
    std::ostringstream out, err;
    int code = run_cli({"verify"}, in, out, err);
    bool has_position = err.str().find("<stdin>:") != std::string::npos;
    c.require(code == kExitUsage && has_position, "malformed input not rejected with a position: " + err.str());
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"matching counts", matching_counts},
      {"tabulated strategies win", figures_win},
      {"W_m construction wins where defined", lemma1_reproduction},
      {"exact optimum for m=2,4", exact_optimum},
      {"component-count certificate", certificate},
      {"m=8 non-winning suite", eight_not_winning},
      {"coloring count oracle", colorings_oracle},
      {"cross-component matching", cross_matching},
      {"representative bijection", representative_bijection},
      {"entangled strategy always wins", quantum_wins},
      {"audit of tabulated strategies", audits},
      {"strategy file round trip", file_round_trip},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", index, name, seconds, c.ok ? "" : ": ",
                c.why.c_str());
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}
