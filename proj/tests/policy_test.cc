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

#include <cmath>
#include <random>

#include "bundlepmg/errors.h"
#include "bundlepmg/policy.h"
#include "test_support.h"

namespace bundlepmg {
namespace {

TEST_CASE("baseline nocm/cm picks the plain-high branch") {
  const SubgameSolution s =
      SolveSubgame(Baseline(), Scenario::Make(true, false, true));
  REQUIRE(s.chosen);
  CHECK(s.chosen->branch == Branch::kR1PlainHigh);
  CHECK(std::abs(*s.chosen->prices.bundle1 - 139.76) < 0.01);
  CHECK(s.chosen->demands.Min() > 0);
  CHECK(s.candidates.size() == 2);
}

TEST_CASE("baseline without bundling picks items_high") {
  const SubgameSolution s =
      SolveSubgame(Baseline(), Scenario::Make(false, false, false));
  REQUIRE(s.chosen);
  CHECK(s.chosen->branch == Branch::kItemsHigh);
  bool low_rejected = false;
  for (const EquilibriumResult& c : s.candidates) {
    if (c.branch == Branch::kItemsLow) low_rejected = !c.feasible;
  }
  CHECK(low_rejected);
}

TEST_CASE("high b_l, low b_s has no equilibrium") {
  MarketParams m = Baseline();
  m.loyal_slope = 0.9;
  m.strategic_slope = 0.1;
  for (const Scenario& sc : AllScenarios()) {
    SolveOptions opt;
    opt.cross_check_oracle = true;
    const SubgameSolution s = SolveSubgame(m, sc, opt);
    CHECK_FALSE(s.chosen);
    CHECK(s.oracle.has_value());
    CHECK_FALSE(s.oracle_gap.has_value());
  }
}

TEST_CASE("unverified conditions are flagged") {
  const SubgameSolution s =
      SolveSubgame(Baseline(), Scenario::Make(true, true, true));
  REQUIRE(s.chosen);
  REQUIRE(s.warnings.size() == 1);
  CHECK(s.warnings[0].find("conditions-not-verified") == 0);
}

TEST_CASE("oracle cross-check agrees at baseline") {
  SolveOptions opt;
  opt.cross_check_oracle = true;
  for (const Scenario& sc : AllScenarios()) {
    const SubgameSolution s = SolveSubgame(Baseline(), sc, opt);
    REQUIRE(s.oracle_gap);
    CHECK(*s.oracle_gap <= 1e-6);
  }
}

TEST_CASE("baseline policy comparison") {
  const PolicyComparison c = ComparePolicies(Baseline());
  for (bool e : c.exists) CHECK(e);
  REQUIRE(c.pi_bundle);
  REQUIRE(c.pi_nobundle);
  REQUIRE(c.delta_pi_bundling);
  CHECK(std::abs(*c.pi_bundle / 1000 - 21.95) < 0.01);
  CHECK(std::abs(*c.pi_nobundle / 1000 - 17.57) < 0.01);
  CHECK(std::abs(*c.delta_pi_bundling / 1000 - 4.38) < 0.01);
  CHECK(*c.delta_pi_bundling == *c.pi_bundle - *c.pi_nobundle);
  REQUIRE(c.best_regime);
  CHECK(c.best_regime->r1_matches);
  CHECK(c.best_regime->Label() == "cm/cm");
  CHECK(c.tie_break == "tie among cm/cm, cm/nocm; picked cm/cm");
}

TEST_CASE("ties prefer nocm/nocm") {
  MarketParams m = Baseline();
  m.item_coupling = 0.9;
  const PolicyComparison c = ComparePolicies(m);
  REQUIRE(c.best_regime);
  CHECK(c.best_regime->Label() == "nocm/nocm");
  CHECK(c.tie_break == "tie among cm/nocm, nocm/nocm; picked nocm/nocm");
}

TEST_CASE("tie-break text is deterministic") {
  MarketParams m = Baseline();
  m.item_coupling = 0.9;
  const PolicyComparison a = ComparePolicies(m);
  const PolicyComparison b = ComparePolicies(m);
  CHECK(a.tie_break == b.tie_break);
  REQUIRE(a.best_regime);
  CHECK(a.best_regime->Label() == b.best_regime->Label());
}

TEST_CASE("no strategic demand leaves no equilibrium") {
  MarketParams m = Baseline();
  m.strategic_base = 0;
  const PolicyComparison c = ComparePolicies(m);
  CHECK_FALSE(c.best_regime.has_value());
  CHECK_FALSE(c.delta_pi_bundling.has_value());
}

TEST_CASE("chosen results are admissible and r1-maximal") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 2000; ++i) {
    const MarketParams m = testing::RandomParams(rng);
    const Scenario& sc = AllScenarios()[i % 5];
    const SubgameSolution s = SolveSubgame(m, sc);
    if (!s.chosen) {
      for (const EquilibriumResult& c : s.candidates) CHECK_FALSE(c.feasible);
      continue;
    }
    CHECK(s.chosen->feasible);
    CHECK(s.chosen->demands.Min() >= -1e-9);
    if (s.chosen->prices.bundle1) {
      CHECK(s.chosen->prices.item1 + s.chosen->prices.item2 >=
            *s.chosen->prices.bundle1 - 1e-9);
    }
    for (const EquilibriumResult& c : s.candidates) {
      if (c.feasible) CHECK(c.profits.r1 <= s.chosen->profits.r1);
    }
  }
}

// Bundling need not pay off the (lambda_l, theta_l) panels; only count.
TEST_CASE("bundling gain is the profit difference on random draws") {
  std::mt19937_64 rng(23);
  int both = 0;
  int losses = 0;
  for (int i = 0; i < 2000; ++i) {
    const PolicyComparison c = ComparePolicies(testing::RandomParams(rng));
    if (!c.delta_pi_bundling) continue;
    ++both;
    losses += *c.delta_pi_bundling <= 0;
    CHECK(*c.delta_pi_bundling == *c.pi_bundle - *c.pi_nobundle);
  }
  MESSAGE("draws with both equilibria: " << both << ", bundling loses: "
                                         << losses);
}

TEST_CASE("invalid parameters are rejected") {
  MarketParams m = Baseline();
  m.loyal_slope = 0.1;
  CHECK_THROWS_AS(SolveSubgame(m, AllScenarios()[0]), InvalidParams);
  CHECK_THROWS_AS(ComparePolicies(m), InvalidParams);
}

}  // namespace
}  // namespace bundlepmg
