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

#ifndef BUNDLEPMG_ORACLE_H_
#define BUNDLEPMG_ORACLE_H_

#include <optional>
#include <vector>

#include "bundlepmg/market_model.h"

namespace bundlepmg {

// Numerical equilibrium search that does not use the closed forms or the
// hand-written gradients. Each regime's profit is recovered as an exact
// quadratic from profit evaluations, maximized over the regime's closure
// subject to nonnegative prices and (with bundling) pb1 <= p1 + p2, and the
// best regime wins.
//
// How a candidate on the regime boundary (pb1 = pb2, or p1 + p2 = pb2) is
// valued decides which equilibria exist:
//
//  kR1HighFormula  The boundary belongs to r1_high and is valued with that
//                  regime's profit. An r1_low optimum that lands on the
//                  boundary is not attained inside r1_low and is dropped.
//                  The closed-form equilibria are fixed points under this
//                  rule.
//  kSharedSplit    Boundary points are valued with the game's profit, which
//                  splits strategic demand by alpha at a tie. Undercutting
//                  to the tie then often pays, and the iteration tends to
//                  settle on the boundary instead.
enum class TieValuation { kR1HighFormula, kSharedSplit };

struct OracleConfig {
  int max_iters = 500;
  double tol_fp = 1e-8;  // sup-norm change between best responses
  double damping = 1.0;  // in (0, 1]
  // Default start is unit costs plus 1 for every price.
  std::optional<PriceVector> initial;
  TieValuation tie = TieValuation::kR1HighFormula;
  bool record_trajectory = false;
};

// Profit the oracle assigns to a price vector under a tie rule.
double OracleValueR1(const MarketParams& params, const Scenario& scenario,
                     const PriceVector& prices, TieValuation tie);
double OracleValueR2(const MarketParams& params, const Scenario& scenario,
                     const PriceVector& prices, TieValuation tie);

struct BestResponseR1 {
  double item1 = 0;
  double item2 = 0;
  std::optional<double> bundle1;
  double value = 0;
  Regime regime = Regime::kR1High;
  // Value of an r1_low optimum sitting on the boundary that was dropped under
  // kR1HighFormula. Prices just inside r1_low earn nearly this much.
  std::optional<double> boundary_value;
};

struct BestResponseR2 {
  double bundle2 = 0;
  double value = 0;
  Regime regime = Regime::kR1High;
  std::optional<double> boundary_value;  // as in BestResponseR1
};

// Throws SingularSystem if a regime profit is not strictly concave.
BestResponseR1 BestResponseToR2(const MarketParams& params,
                                const Scenario& scenario, double bundle2,
                                TieValuation tie = TieValuation::kR1HighFormula);
// Only r1's prices are read from `r1_prices`.
BestResponseR2 BestResponseToR1(const MarketParams& params,
                                const Scenario& scenario,
                                const PriceVector& r1_prices,
                                TieValuation tie = TieValuation::kR1HighFormula);

struct OracleOutcome {
  bool converged = false;
  PriceVector prices;
  int iterations = 0;
  std::vector<PriceVector> trajectory;  // filled when requested
  Regime classified_regime = Regime::kR1High;
  // Largest final best-response gap, max |BR(x) - x|.
  double residual = 0;
  // How much more each retailer would earn just across the boundary in the
  // other regime than at the reported prices. Zero when no boundary optimum
  // was dropped.
  double r1_boundary_gain = 0;
  double r2_boundary_gain = 0;
};

// Alternating (Gauss-Seidel) best responses, r1 first. Non-convergence is
// reported through `converged`, never thrown.
OracleOutcome FindFixedPoint(const MarketParams& params,
                             const Scenario& scenario,
                             const OracleConfig& config = {});

struct MultiStartReport {
  std::vector<PriceVector> starts;
  std::vector<OracleOutcome> runs;               // one per start
  std::vector<PriceVector> distinct_fixed_points;  // converged runs, deduped
};

// Runs from the configured start and from the four corners of the box
// [costs, costs + max base / b_l] in (r1 prices) x (pb2).
MultiStartReport FindFixedPoints(const MarketParams& params,
                                 const Scenario& scenario,
                                 const OracleConfig& config = {});

// Sup-norm distance between price vectors divided by max(1, largest
// reference price).
double RelativePriceGap(const PriceVector& a, const PriceVector& reference);

}  // namespace bundlepmg

#endif  // BUNDLEPMG_ORACLE_H_
