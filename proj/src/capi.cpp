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

#include "polyreg/polyreg.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <string>

#include "polyreg/dispatch.hpp"
#include "polyreg/manifest.hpp"
#include "polyreg/polylog.hpp"
#include "polyreg/symbols.hpp"

struct polyreg_element {
  polyreg::ChainElement e;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

polyreg_status status_for(const polyreg::Error& e) {
  const std::string& k = e.kind();
  if (k == "syntax" || k == "manifest" || k == "zero" || k == "usage") return POLYREG_ERR_PARSE;
  if (k == "quadrature" || k == "precision") return POLYREG_ERR_NUMERIC;
  if (k == "internal") return POLYREG_ERR_INTERNAL;
  return POLYREG_ERR_DOMAIN;
}

template <class F>
polyreg_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const polyreg::Error& e) {
    last_error = e.kind() + ": " + e.what();
    return status_for(e);
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("json: ") + e.what();
    return POLYREG_ERR_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return POLYREG_ERR_INTERNAL;
  }
}

polyreg_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return POLYREG_ERR_ARGUMENT;
}

polyreg_status eval(bool zag, int n, double re, double im, double* coeff, int* twist) {
  if (!coeff || !twist) return null_arg("coeff/twist");
  return guarded([&] {
    const auto p = zag ? polyreg::p_zag(n, {re, im}) : polyreg::p_mod(n, {re, im});
    *coeff = p.coeff;
    *twist = p.twist;
    return POLYREG_OK;
  });
}

}  // namespace

extern "C" {

const char* polyreg_version(void) { return "0.1.0"; }

const char* polyreg_last_error(void) { return last_error.c_str(); }

void polyreg_string_free(char* s) { std::free(s); }

polyreg_status polyreg_element_from_manifest(const char* manifest_json, int lenient, polyreg_element** out) {
  if (!manifest_json || !out) return null_arg("manifest_json/out");
  *out = nullptr;
  return guarded([&] {
    const auto m = polyreg::parse_manifest(nlohmann::json::parse(manifest_json), lenient != 0);
    *out = new polyreg_element{m.element()};
    return POLYREG_OK;
  });
}

void polyreg_element_free(polyreg_element* e) { delete e; }

polyreg_status polyreg_element_to_string(const polyreg_element* e, char** out) {
  if (!e || !out) return null_arg("element/out");
  return guarded([&] {
    *out = dup(e->e.to_string());
    return POLYREG_OK;
  });
}

polyreg_status polyreg_element_to_manifest(const polyreg_element* e, char** out) {
  if (!e || !out) return null_arg("element/out");
  return guarded([&] {
    *out = dup(polyreg::manifest_json(e->e).dump(2));
    return POLYREG_OK;
  });
}

polyreg_status polyreg_element_differential(const polyreg_element* e, polyreg_element** out) {
  if (!e || !out) return null_arg("element/out");
  *out = nullptr;
  return guarded([&] {
    *out = new polyreg_element{polyreg::differential(e->e)};
    return POLYREG_OK;
  });
}

polyreg_status polyreg_element_is_zero(const polyreg_element* e, int* out) {
  if (!e || !out) return null_arg("element/out");
  *out = e->e.is_zero() ? 1 : 0;
  return POLYREG_OK;
}

polyreg_status polyreg_pmod(int n, double re, double im, double* coeff, int* twist) {
  return eval(false, n, re, im, coeff, twist);
}

polyreg_status polyreg_pzag(int n, double re, double im, double* coeff, int* twist) {
  return eval(true, n, re, im, coeff, twist);
}

polyreg_status polyreg_dispatch(const char* command, const char* args_json, int lenient, char** report_json,
                                char** human, int* exit_code) {
  if (!command || !report_json || !exit_code) return null_arg("command/report_json/exit_code");
  return guarded([&] {
    const nlohmann::json args =
        args_json && *args_json ? nlohmann::json::parse(args_json) : nlohmann::json::object();
    const auto r = polyreg::dispatch(command, args, lenient != 0);
    *report_json = dup(r.report.dump(2));
    if (human) *human = dup(r.human);
    *exit_code = r.exit_code;
    return POLYREG_OK;
  });
}

const char* polyreg_commands(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& c : polyreg::command_names()) s += (s.empty() ? "" : " ") + c;
    return s;
  }();
  return names.c_str();
}

const char* polyreg_command_params(const char* command) {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> t;
    for (const auto& c : polyreg::command_names()) {
      std::string s;
      for (const auto& p : polyreg::command_params(c)) s += (s.empty() ? "" : " ") + p;
      t[c] = s;
    }
    return t;
  }();
  if (!command) return nullptr;
  auto it = table.find(command);
  return it == table.end() ? nullptr : it->second.c_str();
}

}  // extern "C"
