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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "matchgame/strategy.h"
#include "matchgame/strategy_io.h"

using namespace matchgame;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) out += line + "\n";
  return out;
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("matchgame_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    std::filesystem::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST(Cli, Certificate) {
  CliResult r = run({"certificate", "--m", "8"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "excluded=true needed=5 possible=4\n");
  EXPECT_EQ(run({"certificate", "--m", "6"}).out, "excluded=false needed=3 possible=3\n");
}

TEST(Cli, Matchings) {
  CliResult r = run({"matchings", "--m", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0-1,2-3\n0-2,1-3\n0-3,1-2\n");
}

TEST_F(CliFiles, EvalFigureFour) {
  std::string path = write("fig4.strat", serialize_strategy(figure_strategy(4)));
  CliResult r = run({"eval", "--strategy", path});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "success=48/48\n");
}

TEST_F(CliFiles, VerifyReportsFirstCounterexample) {
  DeterministicStrategy fig = figure_strategy(4);
  std::vector<std::uint64_t> alice(fig.alice_table().begin(), fig.alice_table().end());
  alice[0b0100] = 0;
  DeterministicStrategy bad(fig.instance(), alice, {fig.bob_table().begin(), fig.bob_table().end()});
  std::string path = write("bad.strat", serialize_strategy(bad));
  CliResult r = run({"verify", "--strategy", path});
  EXPECT_EQ(r.code, kExitPropertyFailed);
  EXPECT_EQ(r.out, "winning=no counterexample=x:0100 y:0-1,2-3\n");
}

TEST(Cli, FiguresPipeIntoVerify) {
  for (const char* m : {"4", "6"}) {
    CliResult fig = run({"figures", "--m", m});
    ASSERT_EQ(fig.code, kExitOk);
    CliResult v = run({"verify"}, fig.out);
    EXPECT_EQ(v.code, kExitOk) << v.err;
    EXPECT_EQ(v.out, "winning=yes\n");
    EXPECT_EQ(run({"verify", "--strategy", "-"}, fig.out).code, kExitOk);
  }
  EXPECT_EQ(run({"figures", "--m", "8"}).code, kExitUsage);
}

TEST(Cli, Lemma1) {
  CliResult partial = run({"lemma1", "--m", "8"});
  EXPECT_EQ(partial.code, kExitOk);
  EXPECT_EQ(run({"verify"}, partial.out).out, "winning=yes\n");
  EXPECT_EQ(run({"eval"}, partial.out).code, kExitUsage);
  CliResult complete = run({"lemma1", "--m", "8", "--complete"});
  CliResult eval = run({"eval"}, complete.out);
  EXPECT_EQ(eval.code, kExitOk);
  EXPECT_EQ(eval.out, "success=23808/26880\n");
  EXPECT_EQ(run({"verify"}, complete.out).code, kExitPropertyFailed);
}

TEST_F(CliFiles, MalformedFileGivesLineAndColumn) {
  std::string text = serialize_strategy(figure_strategy(4));
  text.replace(text.find("alice 0001 -> 00"), 16, "alice 0001 -> 0x");
  std::string path = write("broken.strat", text);
  for (const char* cmd : {"eval", "verify", "audit"}) {
    CliResult r = run({cmd, "--strategy", path});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find(path + ":3:15:"), std::string::npos) << r.err;
  }
  CliResult piped = run({"verify"}, "game m=4\nalice 00000 -> 00\n");
  EXPECT_EQ(piped.code, kExitUsage);
  EXPECT_NE(piped.err.find("<stdin>:2:7:"), std::string::npos) << piped.err;
  EXPECT_EQ(run({"eval", "--strategy", (dir_ / "missing.strat").string()}).code, kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"matchings"}).code, kExitUsage);
  EXPECT_EQ(run({"matchings", "--m", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"quantum"}).code, kExitUsage);
  EXPECT_EQ(run({"quantum", "verify", "--m", "6"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, OmegaD) {
  CliResult four = run({"omega-d", "--m", "4"});
  EXPECT_EQ(four.code, kExitOk);
  EXPECT_EQ(lines_starting(four.out, "success="), "success=48/48\n");
  std::string strategy = four.out.substr(four.out.find('\n') + 1);
  EXPECT_EQ(run({"verify"}, strategy).out, "winning=yes\n");

  CliResult six = run({"omega-d", "--m", "6"});
  EXPECT_EQ(six.code, kExitBudget);
  EXPECT_EQ(six.out, "budget_exceeded space=504857282956046106624 budget=1000000\n");
  EXPECT_EQ(run({"omega-d", "--m", "4", "--budget", "100"}).code, kExitBudget);
}

TEST_F(CliFiles, SearchLabelsLowerBound) {
  CliResult r = run({"search", "--m", "8", "--seed", "5", "--iters", "200", "--from-lemma1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\nbound=lower\n"), std::string::npos);
  EXPECT_EQ(r.out, run({"search", "--m", "8", "--seed", "5", "--iters", "200", "--from-lemma1"}).out);
  std::string out_path = (dir_ / "found.strat").string();
  CliResult to_file =
      run({"search", "--m", "4", "--seed", "1", "--iters", "2000", "--restart-patience", "50", "--out", out_path});
  EXPECT_EQ(to_file.out, "success=48/48\nbound=lower\n" + lines_starting(to_file.out, "restarts="));
  EXPECT_EQ(run({"verify", "--strategy", out_path}).code, kExitOk);
}

TEST(Cli, Audit) {
  CliResult r = run({"audit"}, serialize_strategy(figure_strategy(6)));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines_starting(r.out, "class_size="), "class_size=8\n");
  EXPECT_EQ(lines_starting(r.out, "max_component="), "max_component=4\n");
  EXPECT_EQ(lines_starting(r.out, "parity_consistent="), "parity_consistent=true\n");
}

TEST(Cli, Quantum) {
  CliResult v = run({"quantum", "verify", "--m", "4"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_EQ(lines_starting(v.out, "verified="), "verified=yes questions=48\n");
  CliResult s =
      run({"quantum", "sample", "--m", "4", "--x", "0110", "--y", "0-2,1-3", "--seed", "3", "--rounds", "20"});
  EXPECT_EQ(s.code, kExitOk);
  EXPECT_EQ(lines_starting(s.out, "a=").size(), s.out.size());
  EXPECT_EQ(std::count(s.out.begin(), s.out.end(), '\n'), 20);
  EXPECT_EQ(s.out.find("win=0"), std::string::npos);
  EXPECT_EQ(s.out, run({"quantum", "sample", "--m", "4", "--x", "0110", "--y", "0-2,1-3", "--seed", "3", "--rounds",
                        "20"}).out);
  EXPECT_EQ(run({"quantum", "sample", "--m", "4", "--x", "011", "--y", "0-2,1-3"}).code, kExitUsage);
}
