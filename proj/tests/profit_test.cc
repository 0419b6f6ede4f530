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

#include <algorithm>
#include <cmath>
#include <random>

#include "bundlepmg/closed_form.h"
#include "bundlepmg/conditions.h"
#include "bundlepmg/errors.h"
#include "bundlepmg/profit.h"
#include "test_support.h"

namespace bundlepmg {
namespace {

// Straight-line profit evaluator written from the case table, sharing no
// code with the library.
ProfitPair ReferenceProfits(const MarketParams& m, const Scenario& s,
                            const PriceVector& x) {
  const double b = m.loyal_slope, bs = m.strategic_slope;
  const double th = m.item_coupling, lam = m.bundle_coupling;
  const double c = m.cost1 + m.cost2;
  const double p1 = x.item1, p2 = x.item2, pb2 = x.bundle2;
  double r1 = 0, r2 = 0;
  if (s.bundling) {
    const double pb1 = *x.bundle1;
    const double t1 = (s.r1_matches && pb1 >= pb2) ? pb2 : pb1;
    const double t2 = (s.r2_matches && pb2 > pb1) ? pb1 : pb2;
    const double hat = std::min(pb1, pb2);
    const double share = t1 == t2 ? m.tie_share : (t1 < t2 ? 1.0 : 0.0);
    const double disc = p1 + p2 - pb1;
    const double d1 = m.item1_base - b * p1 - b * th * p2 - lam * disc;
    const double d2 = m.item2_base - b * th * p1 - b * p2 - lam * disc;
    const double dib = m.bundle1_base - b * pb1 + lam * disc;
    const double dqib = m.aware1_base - b * t1 + lam * (p1 + p2 - t1);
    const double djb = m.bundle2_base - b * pb2;
    const double dqjb = m.aware2_base - b * t2;
    const double ds = m.strategic_base - bs * hat;
    r1 = (p1 - m.cost1) * d1 + (p2 - m.cost2) * d2 + (pb1 - c) * dib +
         (t1 - c) * dqib + share * (hat - c) * ds;
    r2 = (pb2 - c) * djb + (t2 - c) * dqjb + (1 - share) * (hat - c) * ds;
  } else {
    const double sum = p1 + p2;
    const double hat = std::min(sum, pb2);
    const double share = sum == pb2 ? m.tie_share : (sum < pb2 ? 1.0 : 0.0);
    const double d1 = m.item1_base - b * p1 - b * th * p2;
    const double d2 = m.item2_base - b * th * p1 - b * p2;
    const double dib = m.bundle1_base - b * sum;
    const double dqib = m.aware1_base - b * sum;
    const double djb = m.bundle2_base - b * pb2;
    const double dqjb = m.aware2_base - b * pb2;
    const double ds = m.strategic_base - bs * hat;
    r1 = (p1 - m.cost1) * d1 + (p2 - m.cost2) * d2 + (sum - c) * (dib + dqib) +
         share * (hat - c) * ds;
    r2 = (pb2 - c) * (djb + dqjb) + (1 - share) * (hat - c) * ds;
  }
  return {r1, r2, r1 + r2};
}

TEST_CASE("table row cm/cm profits") {
  PriceVector x;
  x.item1 = x.item2 = 99.05;
  x.bundle1 = 162.05;
  x.bundle2 = 135;
  const ProfitPair pi =
      ComputeProfits(Baseline(), Scenario::Make(true, true, true), x);
  CHECK(std::abs(pi.r1 / 1000 - 21.95) < 0.01);
  CHECK(std::abs(pi.r2 / 1000 - 13.22) < 0.01);
  CHECK(pi.welfare == pi.r1 + pi.r2);
}

TEST_CASE("zero margins give zero profit") {
  const MarketParams m = Baseline();
  for (const Scenario& s : AllScenarios()) {
    PriceVector x;
    x.item1 = m.cost1;
    x.item2 = m.cost2;
    if (s.bundling) x.bundle1 = m.bundle_cost();
    x.bundle2 = m.bundle_cost();
    const ProfitPair pi = ComputeProfits(m, s, x);
    CHECK(std::abs(pi.r1) < 1e-9);
    CHECK(std::abs(pi.r2) < 1e-9);
  }
}

TEST_CASE("profits match a term-by-term evaluator") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 5000; ++i) {
    const MarketParams m = testing::RandomParams(rng);
    const Scenario& s = AllScenarios()[i % 5];
    PriceVector x = testing::RandomPrices(rng, s);
    if (i % 7 == 0) x.bundle2 = x.R1BundleEquivalent();  // exercise ties
    const ProfitPair got = ComputeProfits(m, s, x);
    const ProfitPair want = ReferenceProfits(m, s, x);
    const double scale = std::max(1.0, std::abs(want.r1) + std::abs(want.r2));
    REQUIRE(std::abs(got.r1 - want.r1) <= 1e-10 * scale);
    REQUIRE(std::abs(got.r2 - want.r2) <= 1e-10 * scale);
    REQUIRE(got.welfare == got.r1 + got.r2);
  }
}

TEST_CASE("strategic share follows the matching rules") {
  const MarketParams m = Baseline();
  PriceVector x;
  x.item1 = x.item2 = 80;
  x.bundle1 = 120;
  x.bundle2 = 140;
  auto share = [&](bool cm1, bool cm2) {
    const Scenario s = Scenario::Make(true, cm1, cm2);
    return StrategicShare(m, s, ComputeEffectivePrices(s, x));
  };
  CHECK(share(false, false) == 1);
  CHECK(share(true, false) == 1);
  CHECK(share(false, true) == m.tie_share);
  x.bundle1 = 150;
  CHECK(share(false, false) == 0);
  CHECK(share(true, false) == m.tie_share);
  CHECK(RegimeStrategicShare(m, Scenario::Make(true, true, false),
                             Regime::kR1High) == m.tie_share);
  CHECK(RegimeStrategicShare(m, Scenario::Make(true, false, false),
                             Regime::kR1Low) == 1);
}

TEST_CASE("gradients match central differences") {
  std::mt19937_64 rng(29);
  int checked = 0;
  while (checked < 100) {
    const MarketParams m = testing::RandomParams(rng);
    const Scenario& s = AllScenarios()[checked % 5];
    const PriceVector x = testing::RandomPrices(rng, s);
    if (std::abs(x.R1BundleEquivalent() - x.bundle2) < 1e-3) continue;
    ++checked;
    const double h = 1e-6;
    const auto g1 = ProfitGradientR1(m, s, x);
    REQUIRE(g1.size() == (s.bundling ? 3u : 2u));
    for (size_t k = 0; k < g1.size(); ++k) {
      PriceVector up = x, dn = x;
      double* u = k == 0 ? &up.item1 : k == 1 ? &up.item2 : &*up.bundle1;
      double* d = k == 0 ? &dn.item1 : k == 1 ? &dn.item2 : &*dn.bundle1;
      *u += h;
      *d -= h;
      const double fd =
          (ComputeProfits(m, s, up).r1 - ComputeProfits(m, s, dn).r1) / (2 * h);
      CHECK(std::abs(fd - g1[k]) <= 1e-5 * std::max(1.0, std::abs(g1[k])));
    }
    PriceVector up = x, dn = x;
    up.bundle2 += h;
    dn.bundle2 -= h;
    const double fd =
        (ComputeProfits(m, s, up).r2 - ComputeProfits(m, s, dn).r2) / (2 * h);
    const double g2 = ProfitGradientR2(m, s, x);
    CHECK(std::abs(fd - g2) <= 1e-5 * std::max(1.0, std::abs(g2)));
  }
}

TEST_CASE("gradient at a kink is an error") {
  const MarketParams m = Baseline();
  PriceVector x;
  x.item1 = x.item2 = 80;
  x.bundle1 = 130;
  x.bundle2 = 130;
  const Scenario s = Scenario::Make(true, false, false);
  CHECK_THROWS_AS(ProfitGradientR1(m, s, x), KinkEvaluation);
  CHECK_THROWS_AS(ProfitGradientR2(m, s, x), KinkEvaluation);
  PriceVector y;
  y.item1 = y.item2 = 65;
  y.bundle2 = 130;
  CHECK_THROWS_AS(ProfitGradientR1(m, Scenario::Make(false, false, false), y),
                  KinkEvaluation);
}

TEST_CASE("gradients vanish at the matched-high closed form") {
  const MarketParams m = testing::SetAExample();
  REQUIRE(testing::SetHolds('A', m));
  const EquilibriumResult r = SolveBranch(Branch::kR1MatchHigh, m);
  for (double g : ProfitGradientR1InRegime(m, r.scenario, r.prices, r.regime)) {
    CHECK(std::abs(g) <= 1e-8);
  }
  CHECK(std::abs(ProfitGradientR2InRegime(m, r.scenario, r.prices, r.regime)) <=
        1e-8);
}

TEST_CASE("lambda_l = 0: bundle gradient ignores item prices") {
  MarketParams m = Baseline();
  m.bundle_coupling = 0;
  const Scenario s = Scenario::Make(true, false, false);
  PriceVector x;
  x.item1 = 50;
  x.item2 = 60;
  x.bundle1 = 100;
  x.bundle2 = 120;
  PriceVector y = x;
  y.item1 = 90;
  y.item2 = 20;
  CHECK(ProfitGradientR1(m, s, x)[2] == ProfitGradientR1(m, s, y)[2]);
}

TEST_CASE("hessians equal second differences of regime profits") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const MarketParams m = testing::RandomParams(rng);
    const Scenario& s = AllScenarios()[i % 5];
    const PriceVector x = testing::RandomPrices(rng, s);
    for (Regime regime : {Regime::kR1High, Regime::kR1Low}) {
      const HessianReport h = HessianR1(m, s, regime);
      auto f = [&](int a, double da, int b, double db) {
        PriceVector y = x;
        double* coords[] = {&y.item1, &y.item2,
                            s.bundling ? &*y.bundle1 : nullptr};
        *coords[a] += da;
        *coords[b] += db;
        return ProfitsInRegime(m, s, y, regime).r1;
      };
      for (int a = 0; a < h.dim; ++a) {
        for (int b = 0; b < h.dim; ++b) {
          // Unit steps are exact for a quadratic.
          const double second =
              (f(a, 1, b, 1) - f(a, 1, b, -1) - f(a, -1, b, 1) +
               f(a, -1, b, -1)) / 4;
          CHECK(std::abs(second - h.matrix[a][b]) <= 1e-6);
        }
      }
      const HessianReport h2 = HessianR2(m, s, regime);
      PriceVector up = x, dn = x;
      up.bundle2 += 1;
      dn.bundle2 -= 1;
      const double second = ProfitsInRegime(m, s, up, regime).r2 -
                            2 * ProfitsInRegime(m, s, x, regime).r2 +
                            ProfitsInRegime(m, s, dn, regime).r2;
      CHECK(std::abs(second - h2.matrix[0][0]) <= 1e-6);
    }
  }
}

TEST_CASE("r2 curvature in matched-high is -4b_l - 2(1-alpha)b_s") {
  const MarketParams m = Baseline();
  const HessianReport h =
      HessianR2(m, Scenario::Make(true, true, true), Regime::kR1High);
  CHECK(h.matrix[0][0] ==
        doctest::Approx(-4 * m.loyal_slope -
                        2 * (1 - m.tie_share) * m.strategic_slope));
}

}  // namespace
}  // namespace bundlepmg
