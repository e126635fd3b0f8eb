// Copyright 2026 The entmon Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entmon {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitAuditFailure = 1,
    kExitInput = 2,  // I/O, parse or bad parameters
    kExitInapplicable = 3,
    kExitCapacity = 4,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// exit code. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace entmon
