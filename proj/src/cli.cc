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

#include "matchgame/cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "matchgame/coloring.h"
#include "matchgame/quantum.h"
#include "matchgame/search.h"
#include "matchgame/strategy.h"
#include "matchgame/strategy_io.h"

namespace matchgame {

namespace {

// Raised for bad input that should exit with the usage code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Commands {
 public:
  Commands(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  int matchings(int m) {
    for (const PerfectMatching& y : enumerate_matchings(GameInstance(m))) out_ << y.to_string() << "\n";
    return kExitOk;
  }

  int eval(const std::string& path) {
    DeterministicStrategy s(load(path));
    out_ << "success=" << success(s).to_string() << "\n";
    return kExitOk;
  }

  int verify(const std::string& path) {
    PartialStrategy s = load(path);
    auto loss = first_counterexample(s);
    if (!loss) {
      out_ << "winning=yes\n";
      return kExitOk;
    }
    out_ << "winning=no counterexample=x:" << loss->x.to_string() << " y:" << loss->y.to_string() << "\n";
    return kExitPropertyFailed;
  }

  int lemma1(int m, bool complete) {
    GameInstance inst(m);
    out_ << (complete ? serialize_strategy(complete_lemma1(inst)) : serialize_strategy(lemma1_strategy(inst)));
    return kExitOk;
  }

  int figures(int m) {
    out_ << serialize_strategy(figure_strategy(m));
    return kExitOk;
  }

  int omega_d(int m, std::uint64_t budget, const std::string& out_path) {
    OptimumResult r = exact_omega_d(GameInstance(m), budget);
    out_ << "success=" << r.success.to_string() << "\n";
    emit_strategy(serialize_strategy(r.witness), out_path);
    return kExitOk;
  }

  int search(int m, std::uint64_t seed, std::uint64_t iters, std::uint64_t patience, bool from_lemma1,
             const std::string& out_path) {
    GameInstance inst(m);
    HillClimbOptions options;
    options.seed = seed;
    options.iterations = iters;
    options.restart_patience = patience;
    if (from_lemma1) {
      DeterministicStrategy start = complete_lemma1(inst);
      options.initial_bob.emplace(start.bob_table().begin(), start.bob_table().end());
    }
    HillClimbResult r = hill_climb(inst, options);
    out_ << "success=" << r.success.to_string() << "\n";
    out_ << "bound=lower\n";
    out_ << "restarts=" << r.restarts << "\n";
    emit_strategy(serialize_strategy(r.strategy), out_path);
    return kExitOk;
  }

  int audit(const std::string& path) {
    DeterministicStrategy s(load(path));
    out_ << audit_lemma2(s).to_string(s.instance().output_width());
    return kExitOk;
  }

  int certificate(int m) {
    out_ << theorem2_certificate(m).to_string() << "\n";
    return kExitOk;
  }

  int quantum_verify(int m) {
    QuantumVerification r = verify_always_wins_report(GameInstance(m));
    out_ << "verified=" << (r.verified ? "yes" : "no") << " questions=" << r.questions << "\n";
    out_ << "max_normalization_error=" << r.max_normalization_error << "\n";
    out_ << "max_order_discrepancy=" << r.max_order_discrepancy << "\n";
    if (r.counterexample) {
      const auto& [q, o] = *r.counterexample;
      out_ << "counterexample=x:" << q.x.to_string() << " y:" << q.y.to_string() << " a=" << o.a.to_string()
           << " edge=" << o.edge.to_string() << " b2=" << o.b2.to_string() << "\n";
    }
    return r.verified ? kExitOk : kExitPropertyFailed;
  }

  int quantum_sample(int m, const std::string& x_text, const std::string& y_text, std::uint64_t seed,
                     std::uint64_t rounds) {
    GameInstance inst(m);
    BitString x = BitString::parse(x_text);
    if (x.width() != m) throw UsageError("--x must have " + std::to_string(m) + " bits");
    PerfectMatching y = parse_matching(y_text, inst);
    for (const Answer& ans : sample_rounds(inst, x, y, seed, rounds)) {
      out_ << "a=" << ans.a.to_string() << " edge=" << ans.edge.to_string() << " b2=" << ans.b2.to_string()
           << " win=" << (wins_round(inst, Question{x, y}, ans) ? 1 : 0) << "\n";
    }
    return kExitOk;
  }

 private:
  PartialStrategy load(const std::string& path) {
    std::string text;
    std::string name = path;
    if (path.empty() || path == "-") {
      name = "<stdin>";
      std::ostringstream buf;
      buf << in_.rdbuf();
      text = buf.str();
    } else {
      std::ifstream file(path);
      if (!file) throw UsageError("cannot open strategy file '" + path + "'");
      std::ostringstream buf;
      buf << file.rdbuf();
      text = buf.str();
    }
    try {
      return parse_strategy(text);
    } catch (const ParseError& e) {
      throw UsageError(name + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
    }
  }

  void emit_strategy(const std::string& text, const std::string& path) {
    if (path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << text;
  }

  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching game toolkit: strategies, impossibility audits, and the entangled strategy", "matchgame"};
  app.require_subcommand(1);
  Commands commands(in, out);
  std::function<int()> action;

  int m = 0;
  std::string strategy_path = "-";
  std::string out_path;
  std::uint64_t budget = kDefaultOmegaBudget;
  std::uint64_t seed = 0;
  std::uint64_t iters = 1000;
  std::uint64_t patience = 0;
  std::uint64_t rounds = 1;
  bool complete = false;
  bool from_lemma1 = false;
  std::string x_text;
  std::string y_text;

  auto* matchings = app.add_subcommand("matchings", "List every perfect matching in canonical order");
  matchings->add_option("--m", m, "Input size")->required();
  matchings->callback([&] { action = [&] { return commands.matchings(m); }; });

  auto* eval = app.add_subcommand("eval", "Exact success of a total strategy");
  eval->add_option("--strategy", strategy_path, "Strategy file ('-' for stdin)");
  eval->callback([&] { action = [&] { return commands.eval(strategy_path); }; });

  auto* verify = app.add_subcommand("verify", "Check that a strategy wins every question it answers");
  verify->add_option("--strategy", strategy_path, "Strategy file ('-' for stdin)");
  verify->callback([&] { action = [&] { return commands.verify(strategy_path); }; });

  auto* lemma1 = app.add_subcommand("lemma1", "Emit the W_m-based strategy");
  lemma1->add_option("--m", m, "Input size")->required();
  lemma1->add_flag("--complete", complete, "Fill undefined Bob rows with (first edge, 0^n)");
  lemma1->callback([&] { action = [&] { return commands.lemma1(m, complete); }; });

  auto* figures = app.add_subcommand("figures", "Emit the tabulated winning strategy for m = 4 or 6");
  figures->add_option("--m", m, "Input size")->required()->check(CLI::IsMember({4, 6}));
  figures->callback([&] { action = [&] { return commands.figures(m); }; });

  auto* omega = app.add_subcommand("omega-d", "Exact optimum over deterministic strategies");
  omega->add_option("--m", m, "Input size")->required();
  omega->add_option("--budget", budget, "Maximum number of Bob tables to enumerate");
  omega->add_option("--out", out_path, "Write the witness strategy here instead of stdout");
  omega->callback([&] { action = [&] { return commands.omega_d(m, budget, out_path); }; });

  auto* search = app.add_subcommand("search", "Hill-climbing lower bound on the optimum");
  search->add_option("--m", m, "Input size")->required();
  search->add_option("--seed", seed, "Random seed");
  search->add_option("--iters", iters, "Iterations");
  search->add_option("--restart-patience", patience, "Restart after this many non-improving iterations");
  search->add_flag("--from-lemma1", from_lemma1, "Start from the completed W_m-based strategy");
  search->add_option("--out", out_path, "Write the strategy here instead of stdout");
  search->callback([&] { action = [&] { return commands.search(m, seed, iters, patience, from_lemma1, out_path); }; });

  auto* audit = app.add_subcommand("audit", "Check the necessary conditions for a winning strategy");
  audit->add_option("--strategy", strategy_path, "Strategy file ('-' for stdin)");
  audit->callback([&] { action = [&] { return commands.audit(strategy_path); }; });

  auto* cert = app.add_subcommand("certificate", "Component-count certificate ruling out winning strategies");
  cert->add_option("--m", m, "Input size")->required();
  cert->callback([&] { action = [&] { return commands.certificate(m); }; });

  auto* quantum = app.add_subcommand("quantum", "Entangled strategy simulator");
  quantum->require_subcommand(1);
  auto* qverify = quantum->add_subcommand("verify", "Exhaustively verify that every outcome wins");
  qverify->add_option("--m", m, "Input size (power of 2)")->required();
  qverify->callback([&] { action = [&] { return commands.quantum_verify(m); }; });
  auto* qsample = quantum->add_subcommand("sample", "Sample rounds for one question");
  qsample->add_option("--m", m, "Input size (power of 2)")->required();
  qsample->add_option("--x", x_text, "Alice's input bits")->required();
  qsample->add_option("--y", y_text, "Bob's matching, e.g. 0-1,2-3")->required();
  qsample->add_option("--seed", seed, "Random seed");
  qsample->add_option("--rounds", rounds, "Number of rounds");
  qsample->callback([&] { action = [&] { return commands.quantum_sample(m, x_text, y_text, seed, rounds); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << "\n";
    out << "budget_exceeded space=" << e.space() << " budget=" << e.budget() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace matchgame
