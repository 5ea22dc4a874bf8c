// Copyright 2026 The cutstrength Authors
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

#ifndef CUTSTRENGTH_CLI_H_
#define CUTSTRENGTH_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace cutstrength {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;

// Runs the command line (without the program name). Results go to out unless
// --output names a file; diagnostics go to err. Returns the exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace cutstrength

#endif  // CUTSTRENGTH_CLI_H_
