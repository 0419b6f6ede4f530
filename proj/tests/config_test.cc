// Copyright 2026 The bundlepmg Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "bundlepmg/config.h"
#include "bundlepmg/errors.h"

namespace bundlepmg {
namespace {

int ErrorLine(const std::string& text) {
  try {
    ParseConfig(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

TEST_CASE("empty config is the baseline") {
  const Config c = ParseConfig("");
  CHECK(c.params.loyal_slope == 0.4);
  CHECK(c.params.bundle_coupling == 0.3);
  CHECK_FALSE(c.sweep.has_value());
}

TEST_CASE("params with comments and blank lines") {
  const Config c = ParseConfig(
      "# baseline with a twist\n"
      "\n"
      "b_l = 0.5   # steeper\n"
      "[params]\n"
      "  a_s=120\r\n"
      "alpha = 0.25\n");
  CHECK(c.params.loyal_slope == 0.5);
  CHECK(c.params.strategic_base == 120);
  CHECK(c.params.tie_share == 0.25);
}

TEST_CASE("sweep section") {
  const Config c = ParseConfig(
      "[params]\n"
      "b_l = 0.4\n"
      "[sweep]\n"
      "name = fig2\n"
      "axis1 = lambda_l 0.05 0.4 20\n"
      "axis2 = theta_l 0.05 0.95 20\n"
      "panel = b_l=0.1 b_s=0.9\n"
      "panel = b_l=0.4 b_s=0.4\n");
  REQUIRE(c.sweep);
  const SweepSpec& s = *c.sweep;
  CHECK(s.name == "fig2");
  CHECK(s.axis1.name == "lambda_l");
  CHECK(s.axis1.steps == 20);
  CHECK(s.axis1.Value(0) == 0.05);
  CHECK(s.axis1.Value(19) == 0.4);
  CHECK(s.axis2.Value(19) == 0.95);
  REQUIRE(s.panels.size() == 2);
  CHECK(s.panels[0].Label() == "b_l=0.1 b_s=0.9");
  MarketParams m;
  s.panels[1].Apply(m);
  CHECK(m.strategic_slope == 0.4);
}

TEST_CASE("single-step axis") {
  const Config c = ParseConfig(
      "[sweep]\naxis1 = lambda_l 0.3 0.3 1\naxis2 = theta_l 0.5 0.5 1\n");
  CHECK(c.sweep->axis1.Value(0) == 0.3);
  CHECK(ErrorLine("[sweep]\naxis1 = lambda_l 0.3 0.4 1\n") == 2);
}

TEST_CASE("errors carry line numbers") {
  CHECK(ErrorLine("b_l = 0.4\nfoo = 1\n") == 2);
  CHECK(ErrorLine("b_l = abc\n") == 1);
  CHECK(ErrorLine("b_l = 0.4x\n") == 1);
  CHECK(ErrorLine("\n\nb_l 0.4\n") == 3);
  CHECK(ErrorLine("[stuff]\n") == 1);
  CHECK(ErrorLine("b_l =\n") == 1);
  CHECK(ErrorLine("= 3\n") == 1);
  CHECK(ErrorLine("b_l = inf\n") == 1);
  CHECK(ErrorLine("[sweep]\naxis1 = lambda_l 0.1 0.2\n") == 2);
  CHECK(ErrorLine("[sweep]\naxis1 = gamma 0.1 0.2 3\n") == 2);
  CHECK(ErrorLine("[sweep]\naxis1 = lambda_l 0.1 0.2 2.5\n") == 2);
  CHECK(ErrorLine("[sweep]\naxis1 = lambda_l 0.3 0.2 4\n") == 2);
  CHECK(ErrorLine("[sweep]\nname = a b\n") == 2);
  CHECK(ErrorLine("[sweep]\npanel = b_l\n") == 2);
  CHECK(ErrorLine("[sweep]\nsteps = 3\n") == 2);
  // Whole-section problems point at the section header.
  CHECK(ErrorLine("b_l=0.4\n[sweep]\naxis1 = lambda_l 0.1 0.2 3\n") == 2);
  CHECK(ErrorLine("[sweep]\naxis1 = b_l 0.1 0.2 3\naxis2 = b_l 0.1 0.2 3\n") ==
        1);
  CHECK(ErrorLine("[sweep]\naxis1 = b_l 0.1 0.2 3\naxis2 = b_s 0.1 0.2 3\n"
                  "panel = b_l=0.3\n") == 1);
}

TEST_CASE("error messages start with the line") {
  try {
    ParseConfig("b_l = 0.4\ngamma = 2\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()) == "line 2: unknown parameter 'gamma'");
  }
}

TEST_CASE("values are not range-checked while parsing") {
  const Config c = ParseConfig("theta_l = 1\n");
  CHECK(c.params.item_coupling == 1);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(LoadConfig("/nonexistent/dir/x.cfg"), ConfigError);
}

}  // namespace
}  // namespace bundlepmg
