// Copyright 2026 The Search Pursuit Authors
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

#ifndef SEARCH_PURSUIT_CLI_H_
#define SEARCH_PURSUIT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace search_pursuit {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitResourceLimit = 3;

// Runs one command line (args excludes the program name) and returns the
// exit code. Subcommands: solve, sweep, learning, verify.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace search_pursuit

#endif  // SEARCH_PURSUIT_CLI_H_
