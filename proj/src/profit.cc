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

#include "bundlepmg/profit.h"

#include "bundlepmg/errors.h"

namespace bundlepmg {

double StrategicShare(const MarketParams& params, const Scenario& scenario,
                      const EffectivePrices& eff) {
  // Without bundling aware1 is p1 + p2 and aware2 is pb2, so the same
  // comparison covers both games.
  (void)scenario;
  if (eff.aware1 == eff.aware2) return params.tie_share;
  return eff.aware1 < eff.aware2 ? 1.0 : 0.0;
}

double RegimeStrategicShare(const MarketParams& params,
                            const Scenario& scenario, Regime regime) {
  const Scenario s = scenario.Canonical();
  if (regime == Regime::kR1High) return s.r1_matches ? params.tie_share : 0.0;
  return s.r2_matches ? params.tie_share : 1.0;
}

ProfitPair ProfitsWithShare(const MarketParams& params,
                            const Scenario& scenario,
                            const PriceVector& prices,
                            const EffectivePrices& eff, double r1_share) {
  const DemandProfile d = ComputeDemands(params, scenario, prices, eff);
  const double c = params.bundle_cost();
  const double strategic_margin = eff.strategic - c;

  ProfitPair out;
  out.r1 = (prices.item1 - params.cost1) * d.item1 +
           (prices.item2 - params.cost2) * d.item2 +
           r1_share * strategic_margin * d.strategic;
  if (scenario.bundling) {
    out.r1 += (*prices.bundle1 - c) * d.bundle1_unaware +
              (eff.aware1 - c) * d.bundle1_aware;
  } else {
    out.r1 += (prices.item1 + prices.item2 - c) *
              (d.bundle1_unaware + d.bundle1_aware);
  }
  out.r2 = (prices.bundle2 - c) * d.bundle2_unaware +
           (eff.aware2 - c) * d.bundle2_aware +
           (1.0 - r1_share) * strategic_margin * d.strategic;
  out.welfare = out.r1 + out.r2;
  return out;
}

ProfitPair ComputeProfits(const MarketParams& params, const Scenario& scenario,
                          const PriceVector& prices) {
  const Scenario s = scenario.Canonical();
  const EffectivePrices eff = ComputeEffectivePrices(s, prices);
  return ProfitsWithShare(params, s, prices, eff,
                          StrategicShare(params, s, eff));
}

ProfitPair ProfitsInRegime(const MarketParams& params,
                           const Scenario& scenario, const PriceVector& prices,
                           Regime regime) {
  const Scenario s = scenario.Canonical();
  CheckPrices(s, prices);
  const EffectivePrices eff = EffectivePricesInRegime(s, prices, regime);
  return ProfitsWithShare(params, s, prices, eff,
                          RegimeStrategicShare(params, s, regime));
}

std::vector<double> ProfitGradientR1InRegime(const MarketParams& params,
                                             const Scenario& scenario,
                                             const PriceVector& prices,
                                             Regime regime) {
  const Scenario s = scenario.Canonical();
  CheckPrices(s, prices);
  const EffectivePrices eff = EffectivePricesInRegime(s, prices, regime);
  const DemandProfile d = ComputeDemands(params, s, prices, eff);
  const double share = RegimeStrategicShare(params, s, regime);
  const double b = params.loyal_slope;
  const double bs = params.strategic_slope;
  const double theta = params.item_coupling;
  const double lam = params.bundle_coupling;
  const double c = params.bundle_cost();
  const double m1 = prices.item1 - params.cost1;
  const double m2 = prices.item2 - params.cost2;
  const bool low = regime == Regime::kR1Low;
  // Marginal strategic revenue when r1's own price sets the market price.
  const double strategic_term =
      low ? share * (d.strategic - bs * (eff.strategic - c)) : 0.0;

  if (!s.bundling) {
    const double items_margin = prices.item1 + prices.item2 - c;
    const double bundle_term =
        d.bundle1_unaware + d.bundle1_aware - 2 * b * items_margin;
    return {d.item1 - b * m1 - b * theta * m2 + bundle_term + strategic_term,
            d.item2 - b * theta * m1 - b * m2 + bundle_term + strategic_term};
  }

  const double t1 = b + lam;
  const double t2 = b * theta + lam;
  const double mb = *prices.bundle1 - c;
  const double ma = eff.aware1 - c;
  // 1 when r1's aware customers pay r1's own bundle price.
  const double own_aware = (regime == Regime::kR1High && s.r1_matches) ? 0 : 1;
  return {d.item1 - t1 * m1 - t2 * m2 + lam * mb + lam * ma,
          d.item2 - t2 * m1 - t1 * m2 + lam * mb + lam * ma,
          lam * m1 + lam * m2 + d.bundle1_unaware - t1 * mb +
              own_aware * (d.bundle1_aware - t1 * ma) + strategic_term};
}

double ProfitGradientR2InRegime(const MarketParams& params,
                                const Scenario& scenario,
                                const PriceVector& prices, Regime regime) {
  const Scenario s = scenario.Canonical();
  CheckPrices(s, prices);
  const EffectivePrices eff = EffectivePricesInRegime(s, prices, regime);
  const DemandProfile d = ComputeDemands(params, s, prices, eff);
  const double share = RegimeStrategicShare(params, s, regime);
  const double b = params.loyal_slope;
  const double bs = params.strategic_slope;
  const double c = params.bundle_cost();
  const bool high = regime == Regime::kR1High;
  const double own_aware = (!high && s.r2_matches) ? 0 : 1;
  double g = d.bundle2_unaware - b * (prices.bundle2 - c) +
             own_aware * (d.bundle2_aware - b * (eff.aware2 - c));
  if (high) {
    g += (1.0 - share) * (d.strategic - bs * (eff.strategic - c));
  }
  return g;
}

namespace {

Regime InteriorRegime(const Scenario& scenario, const PriceVector& prices) {
  CheckPrices(scenario.Canonical(), prices);
  if (prices.R1BundleEquivalent() == prices.bundle2) {
    throw KinkEvaluation(
        "gradient requested on the regime boundary (r1 bundle-equivalent "
        "price equals pb2)");
  }
  return ClassifyRegime(prices);
}

}  // namespace

std::vector<double> ProfitGradientR1(const MarketParams& params,
                                     const Scenario& scenario,
                                     const PriceVector& prices) {
  return ProfitGradientR1InRegime(params, scenario, prices,
                                  InteriorRegime(scenario, prices));
}

double ProfitGradientR2(const MarketParams& params, const Scenario& scenario,
                        const PriceVector& prices) {
  return ProfitGradientR2InRegime(params, scenario, prices,
                                  InteriorRegime(scenario, prices));
}

}  // namespace bundlepmg
