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

#ifndef BUNDLEPMG_CLOSED_FORM_H_
#define BUNDLEPMG_CLOSED_FORM_H_

#include <string>
#include <string_view>
#include <vector>

#include "bundlepmg/conditions.h"
#include "bundlepmg/market_model.h"
#include "bundlepmg/profit.h"

namespace bundlepmg {

// Each branch is the stationary point of one regime's profits, solved in
// closed form. Coverage and condition sets:
//
//   branch              subgames              regime   set
//   kR1MatchHigh        cm/cm, cm/nocm        r1_high  A
//   kR1PlainHigh        nocm/cm, nocm/nocm    r1_high  B
//   kR2MatchLow         cm/cm, nocm/cm        r1_low   C
//   kR2PlainLow         cm/nocm, nocm/nocm    r1_low   D
//   kItemsHigh          no_bundle             r1_high  E
//   kItemsLow           no_bundle             r1_low   F
enum class Branch {
  kR1MatchHigh,
  kR1PlainHigh,
  kR2MatchLow,
  kR2PlainLow,
  kItemsHigh,
  kItemsLow,
};

std::string_view BranchName(Branch branch);
Regime BranchRegime(Branch branch);
char BranchConditionSet(Branch branch);
bool BranchCovers(Branch branch, const Scenario& scenario);
// The two branches covering a scenario, kR1High first.
std::vector<Branch> BranchesFor(const Scenario& scenario);
// The first subgame a branch covers.
Scenario RepresentativeScenario(Branch branch);

struct FeasibilityOptions {
  double tol = 1e-9;      // ordering, nonnegativity, bundle discount
  double foc_tol = 1e-8;  // max FOC residual
  ConditionOptions conditions;
};

struct EquilibriumResult {
  Branch branch = Branch::kR1MatchHigh;
  Scenario scenario;
  PriceVector prices;
  DemandProfile demands;
  ProfitPair profits;
  Regime regime = Regime::kR1High;
  ConditionReport conditions;
  double foc_residual = 0;
  bool feasible = false;
  // Why the result is not admissible; empty when feasible.
  std::vector<std::string> violations;
};

// Prices from the branch formulas alone. Order of evaluation is pb2, then
// pb1, then the item prices. Throws DegenerateParams when a formula divides
// by zero (theta_l = 1, lambda_l = 0, or a vanishing denominator).
PriceVector BranchPrices(Branch branch, const MarketParams& params);

// Prices plus demands, profits, FOC residual, condition report and
// admissibility, evaluated in the branch's regime for the given subgame.
// Never throws for an inadmissible result; it comes back with
// feasible = false. Throws InvalidParams or DegenerateParams for bad
// parameters and Error when the branch does not cover the scenario.
EquilibriumResult SolveBranch(Branch branch, const MarketParams& params,
                              const Scenario& scenario,
                              const FeasibilityOptions& options = {});
EquilibriumResult SolveBranch(Branch branch, const MarketParams& params,
                              const FeasibilityOptions& options = {});

}  // namespace bundlepmg

#endif  // BUNDLEPMG_CLOSED_FORM_H_
