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

#include <doctest.h>

#include "helpers.hpp"
#include "polyreg/dispatch.hpp"
#include "polyreg/manifest.hpp"

using namespace polyreg;
using nlohmann::json;

namespace {

json pair_manifest() {
  return json::parse(R"J({
    "format": "polyreg-manifest/1",
    "weight": 4,
    "variant": "Mtilde",
    "terms": [
      {"coeff": "1", "arg": "t", "wedge": ["t-3"]},
      {"coeff": "1", "arg": "1/t", "wedge": ["t/(t-3)"]}
    ]
  })J");
}

}  // namespace

TEST_CASE("manifest round trip is idempotent after one pass") {
  const Manifest m = parse_manifest(pair_manifest());
  const json once = manifest_json(m.element());
  const json twice = manifest_json(parse_manifest(once).element());
  CHECK(once == twice);
  CHECK(parse_manifest(once).element() == m.element());
}

TEST_CASE("manifest validation") {
  json doc = pair_manifest();
  doc["terms"][0]["coeff"] = 0.5;
  CHECK_THROWS_AS(parse_manifest(doc), Error);

  doc = pair_manifest();
  doc["terms"][0]["coeff"] = "-2/3";
  CHECK(parse_manifest(doc).terms[0].coeff == Rational(-2, 3));

  doc = pair_manifest();
  doc["colour"] = "blue";
  CHECK_THROWS(parse_manifest(doc));
  const Manifest lenient = parse_manifest(doc, true);
  CHECK(lenient.warnings.size() == 1);

  doc = pair_manifest();
  doc.erase("weight");
  CHECK_THROWS(parse_manifest(doc));
}

TEST_CASE("dispatch exit codes") {
  CHECK(dispatch("eval-pmod", {{"n", "2"}, {"z", "0+1i"}}).exit_code == kExitPass);
  CHECK(dispatch("no-such-command", json::object()).exit_code == kExitUsage);
  CHECK(dispatch("eval-pmod", {{"n", "two"}}).exit_code == kExitUsage);
  CHECK(dispatch("eval-pmod", {{"q", "1"}}).exit_code == kExitUsage);
  CHECK(dispatch("eval-pmod", {{"q", "1"}}, true).exit_code == kExitPass);
  CHECK(dispatch("check-cocycle", json::object()).exit_code == kExitUsage);

  json args = {{"manifest", pair_manifest()}};
  CHECK(dispatch("check-cocycle", args).exit_code == kExitPass);
  CHECK(dispatch("is-global", args).exit_code == kExitPass);

  json bad = pair_manifest();
  bad["terms"].erase(1);
  CHECK(dispatch("check-cocycle", {{"manifest", bad}}).exit_code == kExitFail);
  CHECK(dispatch("verify-boundary", {{"manifest", bad}, {"place", "t-3"}, {"factor", "5"}}).exit_code == kExitFail);
}

TEST_CASE("report layout") {
  const auto r = dispatch("relation", {{"kind", "five-term"}, {"x", "t"}, {"y", "1/2"}, {"mode", "both"}});
  CHECK(r.exit_code == 0);
  const json& rep = r.report;
  CHECK(rep["format"] == kReportFormat);
  CHECK(rep["task"] == "relation");
  CHECK(rep["inputs"]["x"] == "t");
  CHECK(rep.contains("wall_clock_s"));
  REQUIRE(rep["verdicts"].size() == 1);
  const json& v = rep["verdicts"][0];
  CHECK(v["children"].size() == 2);
  CHECK(v["children"][0]["pass"] == true);
  CHECK(v["children"][1]["pass"] == true);
  for (const auto& val : rep["values"]) {
    CHECK(val.contains("tolerance"));
    CHECK(val.contains("op"));
  }
}

TEST_CASE("documented command examples") {
  const auto a = dispatch("eval-pmod", {{"n", 2}, {"z", "0+1i"}});
  const json& val = a.report["values"][0]["value"];
  CHECK(val["coeff"].get<double>() == doctest::Approx(0.9159655941772190).epsilon(1e-14));
  CHECK(val["twist"] == 1);
  const auto l = dispatch("lemma419", {{"n", "4"}});
  CHECK(l.exit_code == 0);
  CHECK(l.report["values"][0]["value"].get<int>() > 0);
}
