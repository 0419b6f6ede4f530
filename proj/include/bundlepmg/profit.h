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

#ifndef BUNDLEPMG_PROFIT_H_
#define BUNDLEPMG_PROFIT_H_

#include <vector>

#include "bundlepmg/market_model.h"

namespace bundlepmg {

// Raw currency. Reports divide by 1000.
struct ProfitPair {
  double r1 = 0;
  double r2 = 0;
  double welfare = 0;  // r1 + r2
};

// r1's share of strategic demand at the given prices: tie_share when both
// retailers' effective prices coincide, otherwise 1 or 0 for the strictly
// cheaper retailer.
double StrategicShare(const MarketParams& params, const Scenario& scenario,
                      const EffectivePrices& eff);

// r1's strategic share implied by a regime: in kR1High r1 keeps tie_share
// only if it matches; in kR1Low r1 keeps everything unless r2 matches.
double RegimeStrategicShare(const MarketParams& params,
                            const Scenario& scenario, Regime regime);

// Profits for explicit effective prices and strategic share.
ProfitPair ProfitsWithShare(const MarketParams& params,
                            const Scenario& scenario,
                            const PriceVector& prices,
                            const EffectivePrices& eff, double r1_share);

// Profits of the game: resolves the regime from the prices and splits
// strategic demand with StrategicShare().
ProfitPair ComputeProfits(const MarketParams& params, const Scenario& scenario,
                          const PriceVector& prices);

// The quadratic profit of one regime, extended to all prices. Equals
// ComputeProfits() strictly inside the regime.
ProfitPair ProfitsInRegime(const MarketParams& params,
                           const Scenario& scenario, const PriceVector& prices,
                           Regime regime);

// Analytic first-order conditions of a regime's profit: d/d(p1, p2, pb1)
// for r1 (two entries without bundling) and d/d(pb2) for r2.
std::vector<double> ProfitGradientR1InRegime(const MarketParams& params,
                                             const Scenario& scenario,
                                             const PriceVector& prices,
                                             Regime regime);
double ProfitGradientR2InRegime(const MarketParams& params,
                                const Scenario& scenario,
                                const PriceVector& prices, Regime regime);

// Same, in the regime the prices lie in. Throws KinkEvaluation when r1's
// bundle-equivalent price equals pb2, where the profit is not differentiable.
std::vector<double> ProfitGradientR1(const MarketParams& params,
                                     const Scenario& scenario,
                                     const PriceVector& prices);
double ProfitGradientR2(const MarketParams& params, const Scenario& scenario,
                        const PriceVector& prices);

}  // namespace bundlepmg

#endif  // BUNDLEPMG_PROFIT_H_
