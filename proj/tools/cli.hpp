// Copyright 2026 The moqp Authors
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

#ifndef MOQP_TOOLS_CLI_HPP_
#define MOQP_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace moqp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNoConvergence = 2;

// Runs one command line (args excludes the program name). Reports go to out,
// diagnostics to err.
//
//   solve     one weighted-sum solve                  --weights LIST
//   sweep     solves over many weights                --count N | --grid K
//   check     eigenvalue / convexity audit of each Q_i
//   oracle    brute-force minimum over a sampled cloud --weights LIST --density N
//   frontier  sweep, then keep the mutually non-dominated exact records
//
// Exit codes: 0 ok, 1 usage or input problem, 2 solve did not converge.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace moqp::cli

#endif  // MOQP_TOOLS_CLI_HPP_
