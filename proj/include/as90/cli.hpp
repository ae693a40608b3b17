// Copyright 2026 The as90 Authors
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

// Command line front end: root, period, h90, table, cyclotomic, tensor and
// bigsearch subcommands with text or JSON output.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace as90::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitDomain = 2;

/// Runs one invocation. args excludes the program name. Results go to out,
/// diagnostics to err. Returns 0 on success, 2 on usage or domain errors and
/// 1 when an internal check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace as90::cli
