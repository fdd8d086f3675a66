// Copyright 2026 The kpphase Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KPPHASE_TOOLS_CLI_H_
#define KPPHASE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace kpphase::cli {

// Exit codes. `solve` uses the first three as its verdict.
inline constexpr int kExitSolvable = 0;
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnsolvable = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 3;
inline constexpr int kExitFailure = 4;

// Environment variable supplying the default for --threads.
inline constexpr const char* kThreadsEnv = "KP_PHASE_THREADS";

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kpphase::cli

#endif  // KPPHASE_TOOLS_CLI_H_
