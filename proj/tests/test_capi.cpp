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

// Exercises the shared library through its C interface only.
#include <doctest.h>

#include <cstring>
#include <string>

#include "polyreg/polyreg.h"

namespace {

const char* kPair = R"J({"weight": 4, "terms": [
  {"coeff": "1", "arg": "t", "wedge": ["t-3"]},
  {"coeff": "1", "arg": "1/t", "wedge": ["t/(t-3)"]}]})J";

}  // namespace

TEST_CASE("c api: polylog values") {
  double c = 0;
  int tw = -1;
  REQUIRE(polyreg_pmod(2, 0, 1, &c, &tw) == POLYREG_OK);
  CHECK(c == doctest::Approx(0.9159655941772190).epsilon(1e-14));
  CHECK(tw == 1);
  CHECK(polyreg_pmod(2, 0, 1, nullptr, &tw) == POLYREG_ERR_ARGUMENT);
  CHECK(std::strlen(polyreg_last_error()) > 0);
  CHECK(polyreg_pzag(2, 0, 0, &c, &tw) != POLYREG_OK);
}

TEST_CASE("c api: element handles") {
  polyreg_element* e = nullptr;
  REQUIRE(polyreg_element_from_manifest(kPair, 0, &e) == POLYREG_OK);
  polyreg_element* d = nullptr;
  REQUIRE(polyreg_element_differential(e, &d) == POLYREG_OK);
  int zero = 0;
  CHECK(polyreg_element_is_zero(d, &zero) == POLYREG_OK);
  char* s = nullptr;
  REQUIRE(polyreg_element_to_string(e, &s) == POLYREG_OK);
  CHECK(std::string(s).find("[t]_3") != std::string::npos);
  polyreg_string_free(s);
  char* m = nullptr;
  REQUIRE(polyreg_element_to_manifest(e, &m) == POLYREG_OK);
  polyreg_element* back = nullptr;
  CHECK(polyreg_element_from_manifest(m, 0, &back) == POLYREG_OK);
  polyreg_string_free(m);
  polyreg_element_free(back);
  polyreg_element_free(d);
  polyreg_element_free(e);

  polyreg_element* bad = nullptr;
  CHECK(polyreg_element_from_manifest("{\"weight\": 4, \"terms\": [{\"arg\": \"t^(1/2)\"}]}", 0, &bad) ==
        POLYREG_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(polyreg_element_from_manifest("{not json", 0, &bad) == POLYREG_ERR_PARSE);
}

TEST_CASE("c api: dispatch") {
  char* report = nullptr;
  char* human = nullptr;
  int rc = -1;
  REQUIRE(polyreg_dispatch("lemma419", "{\"n\": \"3\"}", 0, &report, &human, &rc) == POLYREG_OK);
  CHECK(rc == 0);
  CHECK(std::string(report).find("polyreg-report/1") != std::string::npos);
  CHECK(std::string(human).find("PASS") != std::string::npos);
  polyreg_string_free(report);
  polyreg_string_free(human);

  REQUIRE(polyreg_dispatch("frobnicate", "{}", 0, &report, nullptr, &rc) == POLYREG_OK);
  CHECK(rc == 2);
  polyreg_string_free(report);

  CHECK(std::string(polyreg_commands()).find("reg-det") != std::string::npos);
  CHECK(polyreg_command_params("nope") == nullptr);
  CHECK(std::string(polyreg_command_params("eval-pmod")) == "n z");
}
