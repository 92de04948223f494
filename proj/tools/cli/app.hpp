// Copyright 2026 The CPQC Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpqc::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  /// Verification failed or an input file did not parse.
  kFailure = 1,
  /// Bad flag or configuration value.
  kConfigError = 2,
  /// Training diverged.
  kDiverged = 3,
};

/// Runs `cpqc <command> [flags]`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpqc::cli
