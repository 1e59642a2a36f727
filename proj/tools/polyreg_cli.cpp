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

// polyreg command line. Every command goes through polyreg_dispatch; this
// file only turns flags into the JSON argument object.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "polyreg/polyreg.h"

namespace {

std::vector<std::string> split(const char* s) {
  std::vector<std::string> out;
  if (!s) return out;
  std::istringstream is(s);
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

const std::map<std::string, std::string> kAbout = {
    {"eval-pmod", "P_n^mod(z) as coefficient and twist"},
    {"eval-pzag", "P_n,Zag(z) as coefficient and twist"},
    {"eval-li", "Li_k(z)"},
    {"check-cocycle", "is the manifest element a cocycle"},
    {"boundary", "tame-symbol boundaries at one or all places"},
    {"is-global", "test every boundary with P^mod"},
    {"verify-boundary", "contour residue against the predicted boundary value"},
    {"residue", "contour residue around one place"},
    {"constancy", "symbolic and sampled constancy of a P_n^mod sum"},
    {"standard-integral", "one of the standard integrals over P^1"},
    {"thm34-check", "inversion identity of the regulator integrand"},
    {"relation", "certificate and numeric check of a relation"},
    {"lemma419", "formal check of the alternating construction"},
    {"identities", "identity suite on a weight-4 cocycle"},
    {"reg-det", "det(R) / ((2 pi i)^(n r) det T)"},
};

struct Sub {
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::string kind;  // positional for `relation`
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyreg: single-valued polylogarithms, symbol complexes and regulator checks"};
  app.require_subcommand(1);
  std::string manifest_path, out_path;
  bool lenient = false, json_out = false;
  app.add_option("--manifest", manifest_path, "manifest file (JSON)")->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "write the machine-readable report here");
  app.add_flag("--lenient", lenient, "warn about unknown fields instead of failing");
  app.add_flag("--json", json_out, "print the machine-readable report instead of the summary");

  std::map<std::string, Sub> subs;
  for (const auto& name : split(polyreg_commands())) {
    Sub& s = subs[name];
    const auto about = kAbout.find(name);
    s.app = app.add_subcommand(name, about == kAbout.end() ? "" : about->second);
    s.app->fallthrough();
    for (const auto& p : split(polyreg_command_params(name.c_str()))) {
      if (p == "kind") {
        s.app->add_option("kind", s.kind, "relation kind (five-term, goncharov22, inversion, one_minus, duplication)");
        continue;
      }
      s.app->add_option("--" + p, s.values[p]);
    }
    // Manifest and output flags are also accepted after the subcommand.
    s.app->add_option("--manifest", manifest_path)->check(CLI::ExistingFile);
    s.app->add_option("--out", out_path);
    s.app->add_flag("--lenient", lenient);
    s.app->add_flag("--json", json_out);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string command;
  Sub* sub = nullptr;
  for (auto& [name, s] : subs)
    if (s.app->parsed()) {
      command = name;
      sub = &s;
    }

  nlohmann::json args = nlohmann::json::object();
  for (const auto& [k, v] : sub->values)
    if (sub->app->count("--" + k) > 0) args[k] = v;
  if (!sub->kind.empty()) args["kind"] = sub->kind;
  if (!manifest_path.empty()) {
    std::ifstream in(manifest_path);
    try {
      args["manifest"] = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: " << manifest_path << ": " << e.what() << "\n";
      return 2;
    }
  }

  char* report = nullptr;
  char* human = nullptr;
  int exit_code = 2;
  if (polyreg_dispatch(command.c_str(), args.dump().c_str(), lenient ? 1 : 0, &report, &human, &exit_code) !=
      POLYREG_OK) {
    std::cerr << "error: " << polyreg_last_error() << "\n";
    return 2;
  }
  std::cout << (json_out ? std::string(report) + "\n" : std::string(human));
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << report << "\n";
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      exit_code = 2;
    }
  }
  polyreg_string_free(report);
  polyreg_string_free(human);
  return exit_code;
}
