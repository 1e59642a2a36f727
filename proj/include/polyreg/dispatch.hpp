// Copyright 2026 The polyreg Authors
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

#include <string>
#include <vector>

#include <json.hpp>

namespace polyreg {

/// Exit codes of the command layer.
enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

struct DispatchResult {
  nlohmann::json report;
  int exit_code = kExitPass;
  /// Plain-text rendering of the report.
  std::string human;
};

/// Runs one command. `args` holds the parameters by name (strings or JSON
/// numbers) and optionally "manifest" (a manifest document). Parameters in
/// manifest.task are used when not given directly. Never throws: failures
/// become reports with exit code 1 or 2.
DispatchResult dispatch(const std::string& command, const nlohmann::json& args, bool lenient = false);

/// Command names in the order they are documented.
const std::vector<std::string>& command_names();

/// Parameters each command accepts (besides "manifest").
const std::vector<std::string>& command_params(const std::string& command);

std::string render_report(const nlohmann::json& report);

}  // namespace polyreg
