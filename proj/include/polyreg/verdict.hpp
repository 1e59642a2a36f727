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

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace polyreg {

/// Outcome of a comparison, with enough trail to see why it failed.
struct Verdict {
  std::string name;
  bool pass = false;
  std::string claimed;
  std::string computed;
  double tolerance = 0.0;
  /// |claimed - computed| when both are numbers, NaN otherwise.
  double residual = std::numeric_limits<double>::quiet_NaN();
  /// "strict", "pool-assisted", "failed", "numeric", ... (empty when n/a).
  std::string mode;
  std::vector<std::string> details;
  std::vector<Verdict> children;

  /// pass = all children pass (keeps an existing failure).
  void absorb_children() {
    for (const auto& c : children) pass = pass && c.pass;
  }
};

}  // namespace polyreg
