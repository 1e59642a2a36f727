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

#include "polyreg/symbols.hpp"

namespace polyreg {

inline constexpr const char* kManifestFormat = "polyreg-manifest/1";
inline constexpr const char* kReportFormat = "polyreg-report/1";

struct Manifest {
  int weight = 0;
  int degree = 2;
  Variant variant = Variant::Mtilde;
  std::vector<SymbolTerm> terms;
  std::vector<std::string> relation_pool;
  nlohmann::json task = nlohmann::json::object();
  std::vector<std::string> warnings;

  ChainElement element() const;
};

/// Validates and parses a manifest document. Unknown fields raise
/// Error("manifest") unless `lenient`, in which case they become warnings.
Manifest parse_manifest(const nlohmann::json& doc, bool lenient = false);

/// Manifest for a chain element (terms in canonical form).
nlohmann::json manifest_json(const ChainElement& e, const std::vector<std::string>& relation_pool = {},
                             const nlohmann::json& task = nlohmann::json::object());

/// Reads a coefficient given as "p/q" or a JSON integer; floats are rejected.
Rational json_rational(const nlohmann::json& v, const std::string& where);

nlohmann::json verdict_json(const Verdict& v);

}  // namespace polyreg
