// Copyright 2026 The zsmagic Authors
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


#ifndef ZSMAGIC_TOOLS_CLI_HPP_
#define ZSMAGIC_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace zsmagic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. JSON (or, for
/// `gen`, an edge list) goes to `out`; a one-line summary or the error goes
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsmagic::cli

#endif  // ZSMAGIC_TOOLS_CLI_HPP_
