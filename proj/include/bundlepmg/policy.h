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

#ifndef BUNDLEPMG_POLICY_H_
#define BUNDLEPMG_POLICY_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bundlepmg/closed_form.h"
#include "bundlepmg/oracle.h"

namespace bundlepmg {

struct SolveOptions {
  FeasibilityOptions feasibility;
  bool cross_check_oracle = false;
  OracleConfig oracle;
};

struct SubgameSolution {
  Scenario scenario;
  // Feasible candidate with the highest r1 profit, if any.
  std::optional<EquilibriumResult> chosen;
  std::vector<EquilibriumResult> candidates;
  std::vector<std::string> warnings;
  // Filled when cross_check_oracle is set.
  std::optional<OracleOutcome> oracle;
  std::optional<double> oracle_gap;  // RelativePriceGap to chosen
};

// Throws InvalidParams for parameters outside the model's domain.
SubgameSolution SolveSubgame(const MarketParams& params,
                             const Scenario& scenario,
                             const SolveOptions& options = {});

struct PolicyComparison {
  // Indexed like AllScenarios().
  std::array<SubgameSolution, 5> subgames;
  std::array<bool, 5> exists{};
  std::optional<double> pi_bundle;
  std::optional<double> pi_nobundle;
  std::optional<double> delta_pi_bundling;  // pi_bundle - pi_nobundle
  std::optional<Scenario> best_regime;
  // Set when several bundling subgames reach pi_bundle; names the tied
  // subgames and the pick.
  std::string tie_break;
};

// Ties among equally profitable bundling subgames go to nocm/nocm, then to
// the lexicographically smallest label.
PolicyComparison ComparePolicies(const MarketParams& params,
                                 const SolveOptions& options = {});

}  // namespace bundlepmg

#endif  // BUNDLEPMG_POLICY_H_
