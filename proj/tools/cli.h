// Copyright 2026 The symtk Authors.
//
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

#ifndef SYMTK_TOOLS_CLI_H_
#define SYMTK_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace symtk::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // non-isomorphic, FALSIFIED
inline constexpr int kExitUsage = 2;     // bad flags, bad input, I/O failure

// Runs one invocation. args excludes the program name.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace symtk::cli

#endif  // SYMTK_TOOLS_CLI_H_
