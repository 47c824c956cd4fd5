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

#ifndef MATCHGAME_CLI_H_
#define MATCHGAME_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace matchgame {

enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs one command. `args` excludes the program name. Strategy files named
/// "-" (or omitted) are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace matchgame

#endif  // MATCHGAME_CLI_H_
