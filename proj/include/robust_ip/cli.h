// Copyright 2026 The robust_ip Authors
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

#ifndef ROBUST_IP_CLI_H_
#define ROBUST_IP_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace robust_ip {

// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,            // optimal / all checks passed
  kExitInvalid = 1,       // parse or validation error
  kExitInfeasible = 2,    // feasible set proven empty
  kExitInconclusive = 3,  // a resource cap was hit
  kExitVerifyFailed = 4,  // some verification check failed
  kExitOverflow = 5,      // exact arithmetic left the int64 range
};

// Environment variable naming the --auto-graver cache directory. When unset
// the cache lives beside the instance file.
inline constexpr const char* kCacheDirEnv = "ROBUST_IP_CACHE_DIR";

// Runs one command line (args[0] is the program name). Human-readable output
// goes to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace robust_ip

#endif  // ROBUST_IP_CLI_H_
